#pragma once

#include <vector>

#include "fatsep/exact_solver.hpp"

namespace fatsep {

struct PtasConfig {
  /// Target accuracy, 0 < epsilon < 1.
  double epsilon = 0.25;
  /// Recursion stops once the estimate is at most ceil((c_stop / eps)^d).
  double c_stop = 3.0;
  /// Settings for the exact solves at the leaves and for the separator.
  SolveConfig exact;

  int stop_threshold(int dim) const;
  void validate() const;
};

/// Boundary objects given up at one separation step.
struct LevelLoss {
  int depth = 0;
  int boundary_objects = 0;
  int boundary_measure = 0;  // greedy packing measure of the discarded objects
  int total_measure = 0;     // greedy measure of the sub-collection that was split
};

struct PtasPackResult {
  PackSolution solution;  // stats.depth counts separation levels, leaves included
  std::vector<LevelLoss> losses;
};

struct PtasPierceResult {
  PierceSolution solution;
  std::vector<LevelLoss> losses;
};

/// Separate while the greedy estimate exceeds the stop threshold, discard
/// the boundary objects, and solve the leaves exactly.
PtasPackResult ptas_pack(const Instance& inst, const PtasConfig& cfg = {});

/// Separate while the greedy piercing estimate exceeds the stop threshold;
/// boundary objects are pierced greedily and the remaining inside and
/// outside objects are handled recursively.
PtasPierceResult ptas_pierce(const Instance& inst, const PtasConfig& cfg = {});

}  // namespace fatsep
