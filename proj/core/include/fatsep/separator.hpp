#pragma once

#include <span>
#include <vector>

#include "fatsep/geometry.hpp"
#include "fatsep/measure.hpp"

namespace fatsep {

struct SeparatorConfig {
  /// Splitting parameter, 0 < epsilon <= 1/2.
  double epsilon = 0.25;
  /// A separation counts as balanced when each side's measure is at most
  /// balance_cap times the total.
  double balance_cap = 0.8;
  /// Upper bound on the number of shells evaluated by the sweep.
  int shell_samples_cap = 64;
  /// Ratio between consecutive side lengths of the base-box search ladder.
  double side_search_ratio = 1.05;

  /// Throws fatsep::Error when a field is out of range.
  void validate() const;
};

struct SeparatorResult {
  BoxRegion box;
  BoxRegion base_box;
  double m_star = 1.0;
  std::vector<int> inside_ids;
  std::vector<int> outside_ids;
  std::vector<int> boundary_ids;
  MeasureEstimate mu_total;
  MeasureEstimate mu_inside;
  MeasureEstimate mu_outside;
  MeasureEstimate mu_boundary;
  /// Set when all object centres coincide; the box is then a tiny cube.
  bool degenerate = false;

  /// Both sides carry at most `cap` times the total measure.
  bool balanced(double cap) const;
};

struct ShellEvaluation {
  int index = 0;
  double magnification = 1.0;
  std::vector<int> boundary_ids;
  /// Boundary objects smaller than the sweep's size threshold.
  std::vector<int> small_boundary_ids;
  int measure = 0;
  int small_measure = 0;
};

struct ShellSweepResult {
  double m_star = 1.0;
  int boundary_measure = 0;
  int best_index = 0;
  /// l_d / (8 g^(1/d)): objects below this size are "small".
  double size_threshold = 0.0;
  std::vector<ShellEvaluation> shells;
};

/// Approximate minimum-volume box of aspect ratio at most 2 whose centred
/// objects reach a greedy packing measure of `tau`. Candidates are cubes and
/// 1:2 boxes with sides on a geometric ladder between the smallest and the
/// largest pairwise centre distance; each low face is anchored at an object
/// centre coordinate. Candidates are scanned by increasing volume.
///
/// Throws when `tau` exceeds the greedy measure of the whole collection.
BoxRegion find_base_box(std::span<const FatObject> objs, int tau, const SeparatorConfig& cfg = {});

/// Evaluates the shells B_m, m = 1 + j / g^(1/d) for
/// j = 0 .. floor((2^(1/d) - 1) g^(1/d)), and keeps the one whose boundary
/// objects have the smallest greedy measure (smallest j on ties).
ShellSweepResult shell_sweep(std::span<const FatObject> objs, const BoxRegion& base, int g,
                             const SeparatorConfig& cfg = {});

/// Base box for tau = ceil((1 + eps) / 3 * g), shell sweep, then
/// classification of every object against the chosen shell. Requires at
/// least two objects.
SeparatorResult separate(std::span<const FatObject> objs, const SeparatorConfig& cfg = {});

/// The measure lower bound (3 c d^2 8^d / eps)^d under which the box
/// separation is guaranteed. Informational only: far beyond desk-scale
/// instances.
double guaranteed_separation_threshold(int dim, double epsilon, double fatness_constant);

}  // namespace fatsep
