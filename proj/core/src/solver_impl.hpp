#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "fatsep/exact_solver.hpp"
#include "problem.hpp"
#include "separator_impl.hpp"

namespace fatsep::detail {

struct Tally {
  std::int64_t nodes = 0;
  int depth = 0;
  int separations = 0;
  int fallbacks = 0;

  void absorb(const Tally& other);
};

/// Shared node budget. Once exhausted every solver returns greedy answers.
class NodeBudget {
 public:
  explicit NodeBudget(std::int64_t cap) : cap_(cap) {}

  /// Charges `n` nodes; false once the cap has been exceeded.
  bool charge(std::int64_t n);
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }

 private:
  std::int64_t cap_;
  std::atomic<std::int64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

struct Outcome {
  std::vector<std::size_t> members;  // object positions (pack) or candidate indices (pierce)
  Tally tally;
};

/// A separation the recursion can use: not degenerate, balanced, and both
/// sides strictly smaller than the input.
bool usable(const Separation& sep, const Bits& subset, double balance_cap);

class PackRecursion {
 public:
  PackRecursion(const Problem& problem, const SolveConfig& cfg, NodeBudget& budget)
      : problem_(problem), cfg_(cfg), budget_(budget) {}

  Outcome solve(const Bits& subset, int depth) const;
  Outcome pivot(const Bits& subset, int depth) const;

 private:
  const Problem& problem_;
  const SolveConfig& cfg_;
  NodeBudget& budget_;
};

class PierceRecursion {
 public:
  PierceRecursion(const Problem& problem, const SolveConfig& cfg, NodeBudget& budget)
      : problem_(problem), cfg_(cfg), budget_(budget) {}

  Outcome solve(const Bits& subset, int depth) const;
  Outcome pivot(const Bits& subset, int depth) const;

 private:
  const Problem& problem_;
  const SolveConfig& cfg_;
  NodeBudget& budget_;
};

/// Depth-first enumeration of independent subsets of `pool` (each once,
/// members ascending), stopping at `cap` members.
template <typename Visit>
void for_each_independent_subset(const Problem& problem, Bits pool, int cap, std::vector<std::size_t>& current,
                                 Visit& visit) {
  visit(current);
  if (static_cast<int>(current.size()) >= cap) return;
  for (auto i = pool.find_first(); i != Bits::npos; i = pool.find_next(i)) {
    Bits next = pool - problem.closed_neighborhood(i);
    current.push_back(i);
    for_each_independent_subset(problem, std::move(next), cap, current, visit);
    current.pop_back();
    pool.reset(i);
  }
}

}  // namespace fatsep::detail
