#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fatsep/instance.hpp"
#include "fatsep/separator.hpp"

namespace fatsep {

struct SolveConfig {
  /// Sub-collections whose greedy estimate is at most this are solved by
  /// the bounded exact search.
  int base_threshold = 12;
  SeparatorConfig separator;
  /// Abort guard on the number of search nodes.
  std::int64_t node_cap = 100'000'000;
  /// Evaluate the inside and outside subproblems of the top recursion
  /// levels concurrently. Results and node counts do not depend on it.
  bool parallel_branches = false;
  /// Prune packing branches with greedy clique-cover upper bounds. Off, the
  /// search only uses object counts as bounds.
  bool clique_bound = true;

  void validate() const;
};

struct SearchStats {
  std::int64_t nodes = 0;
  int depth = 0;
  int separations = 0;
  int fallbacks = 0;
  std::chrono::duration<double> wall_time{0};
  /// False when node_cap stopped the search; the value is then a lower
  /// bound (packing) or upper bound (piercing) backed by a feasible witness.
  bool optimal = true;
};

struct PackSolution {
  int value = 0;
  std::vector<int> witness;  // pairwise disjoint object ids, ascending
  SearchStats stats;
};

struct PierceSolution {
  int value = 0;
  std::vector<Point> witness;  // every object contains one of these
  SearchStats stats;
};

/// Exact packing number by recursive separation: for every independent set
/// I of boundary objects, |I| + Pack(inside - N(I)) + Pack(outside - N(I)).
/// Unbalanced or degenerate separations fall back to pivot branching.
PackSolution solve_pack(const Instance& inst, const SolveConfig& cfg = {});

/// Exact piercing number by recursive separation: for every point set P
/// piercing the boundary objects, |P| + Pierce(inside - covered(P)) +
/// Pierce(outside - covered(P)).
/// Throws for collections candidate_pierce_points does not support.
PierceSolution solve_pierce(const Instance& inst, const SolveConfig& cfg = {});

/// One pivot step at the root, children solved with solve_pack's recursion.
/// Packing pivots on a maximum-degree object o:
/// max(Pack(C - {o}), 1 + Pack(C - N[o])).
PackSolution pivot_pack(const Instance& inst, const SolveConfig& cfg = {});

/// One pivot step at the root: branch over the candidate points inside the
/// smallest object.
PierceSolution pivot_pierce(const Instance& inst, const SolveConfig& cfg = {});

/// Calls `visit` once for every independent subset (ids ascending) of
/// `boundary` with at most `cap` members, the empty set included. Returns
/// the number of subsets visited.
std::size_t enumerate_boundary_independent_sets(std::span<const FatObject> boundary, int cap,
                                                const std::function<void(const std::vector<int>&)>& visit);

/// Closed neighbourhood: every object intersecting one of `ids`, the ids
/// themselves included. Ascending.
std::vector<int> neighborhood(const Instance& inst, const std::vector<int>& ids);

}  // namespace fatsep
