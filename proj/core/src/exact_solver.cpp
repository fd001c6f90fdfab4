#include "fatsep/exact_solver.hpp"

#include <algorithm>
#include <future>

#include "fatsep/error.hpp"
#include "measure_impl.hpp"
#include "solver_impl.hpp"

namespace fatsep {

void SolveConfig::validate() const {
  if (base_threshold < 1) throw Error("base_threshold must be at least 1");
  if (node_cap < 1) throw Error("node_cap must be at least 1");
  separator.validate();
}

namespace detail {

namespace {

// Inside/outside pairs below this recursion depth run concurrently when
// parallel_branches is set.
constexpr int kParallelDepth = 3;

template <typename Recursion>
std::pair<Outcome, Outcome> solve_pair(const Recursion& rec, const Bits& a, const Bits& b, int depth, bool parallel) {
  if (parallel && depth < kParallelDepth) {
    auto first = std::async(std::launch::async, [&] { return rec.solve(a, depth + 1); });
    Outcome second = rec.solve(b, depth + 1);
    return {first.get(), std::move(second)};
  }
  Outcome first = rec.solve(a, depth + 1);
  Outcome second = rec.solve(b, depth + 1);
  return {std::move(first), std::move(second)};
}

std::size_t first_in_size_order(const Problem& problem, const Bits& subset) {
  for (auto i : problem.size_order()) {
    if (subset.test(i)) return i;
  }
  return Bits::npos;
}

}  // namespace

void Tally::absorb(const Tally& other) {
  nodes += other.nodes;
  depth = std::max(depth, other.depth);
  separations += other.separations;
  fallbacks += other.fallbacks;
}

bool NodeBudget::charge(std::int64_t n) {
  const auto total = used_.fetch_add(n, std::memory_order_relaxed) + n;
  if (total > cap_) exhausted_.store(true, std::memory_order_relaxed);
  return !exhausted();
}

bool usable(const Separation& sep, const Bits& subset, double balance_cap) {
  if (sep.degenerate) return false;
  if (sep.boundary == subset || sep.inside == subset || sep.outside == subset) return false;
  return sep.balanced(balance_cap);
}

Outcome PackRecursion::solve(const Bits& subset, int depth) const {
  Outcome out;
  out.tally.nodes = 1;
  out.tally.depth = depth;
  if (!budget_.charge(1)) {
    out.members = greedy_pack(problem_, subset);
    return out;
  }
  if (subset.none()) return out;

  auto greedy = greedy_pack(problem_, subset);
  if (cfg_.clique_bound && static_cast<int>(greedy.size()) == clique_cover_bound(problem_, subset)) {
    out.members = std::move(greedy);
    return out;
  }
  if (static_cast<int>(greedy.size()) <= cfg_.base_threshold) {
    std::int64_t nodes = 0;
    auto found = max_independent(problem_, subset, cfg_.base_threshold + 1, nodes, cfg_.clique_bound);
    out.tally.nodes += nodes;
    budget_.charge(nodes);
    if (found.value <= cfg_.base_threshold) {
      out.members = std::move(found.members);
      return out;
    }
  }

  const Separation sep = separate(problem_, subset, cfg_.separator);
  ++out.tally.separations;
  if (!usable(sep, subset, cfg_.separator.balance_cap)) {
    Outcome fallback = pivot(subset, depth);
    fallback.tally.nodes += out.tally.nodes;
    fallback.tally.separations += out.tally.separations;
    return fallback;
  }

  const auto upper_bound = [&](const Bits& part) {
    return cfg_.clique_bound ? static_cast<std::size_t>(clique_cover_bound(problem_, part)) : part.count();
  };
  out.members = std::move(greedy);
  std::vector<std::size_t> current;
  auto visit = [&](const std::vector<std::size_t>& chosen) {
    if (budget_.exhausted()) return;
    const Bits blocked = problem_.neighborhood(problem_.from_positions(chosen));
    const Bits in = sep.inside - blocked;
    const Bits outside = sep.outside - blocked;
    const auto bound = chosen.size() + upper_bound(in) + upper_bound(outside);
    if (bound <= out.members.size()) return;
    auto [a, b] = solve_pair(*this, in, outside, depth, cfg_.parallel_branches);
    out.tally.absorb(a.tally);
    out.tally.absorb(b.tally);
    if (chosen.size() + a.members.size() + b.members.size() > out.members.size()) {
      std::vector<std::size_t> merged = chosen;
      merged.insert(merged.end(), a.members.begin(), a.members.end());
      merged.insert(merged.end(), b.members.begin(), b.members.end());
      out.members = std::move(merged);
    }
  };
  for_each_independent_subset(problem_, sep.boundary, static_cast<int>(sep.boundary.count()), current, visit);
  return out;
}

Outcome PackRecursion::pivot(const Bits& subset, int depth) const {
  Outcome out;
  out.tally.depth = depth;
  out.tally.fallbacks = 1;
  std::size_t pivot = Bits::npos;
  std::size_t best_degree = 0;
  for (auto i = subset.find_first(); i != Bits::npos; i = subset.find_next(i)) {
    const std::size_t deg = problem_.degree_in(i, subset);
    if (pivot == Bits::npos || deg > best_degree) {
      pivot = i;
      best_degree = deg;
    }
  }
  if (pivot == Bits::npos) return out;
  Bits without = subset;
  without.reset(pivot);
  const Bits with = subset - problem_.closed_neighborhood(pivot);
  Outcome skip = solve(without, depth + 1);
  Outcome take = solve(with, depth + 1);
  out.tally.absorb(skip.tally);
  out.tally.absorb(take.tally);
  if (take.members.size() + 1 > skip.members.size()) {
    out.members = std::move(take.members);
    out.members.push_back(pivot);
  } else {
    out.members = std::move(skip.members);
  }
  return out;
}

Outcome PierceRecursion::solve(const Bits& subset, int depth) const {
  Outcome out;
  out.tally.nodes = 1;
  out.tally.depth = depth;
  if (!budget_.charge(1)) {
    out.members = greedy_pierce(problem_, subset);
    return out;
  }
  if (subset.none()) return out;

  auto greedy = greedy_pierce(problem_, subset);
  if (static_cast<int>(greedy.size()) <= cfg_.base_threshold) {
    std::int64_t nodes = 0;
    auto found = min_cover(problem_, subset, cfg_.base_threshold, nodes);
    out.tally.nodes += nodes;
    budget_.charge(nodes);
    if (found) {
      out.members = std::move(*found);
      return out;
    }
  }

  const Separation sep = separate(problem_, subset, cfg_.separator);
  ++out.tally.separations;
  if (!usable(sep, subset, cfg_.separator.balance_cap)) {
    Outcome fallback = pivot(subset, depth);
    fallback.tally.nodes += out.tally.nodes;
    fallback.tally.separations += out.tally.separations;
    return fallback;
  }

  const auto& cs = problem_.candidates();
  out.members = std::move(greedy);
  std::vector<std::size_t> chosen;

  // Covers of the boundary objects. At each level the first uncovered
  // object (by size) is pierced by one of its non-dominated candidates;
  // candidates tried in earlier sibling branches are excluded afterwards so
  // each point set is produced once.
  const auto cover = [&](const auto& self, const Bits& uncovered, std::vector<std::size_t> forbidden) -> void {
    if (budget_.exhausted()) return;
    if (uncovered.none()) {
      const Bits hit = covered(problem_, subset, chosen);
      const Bits in = sep.inside - hit;
      const Bits outside = sep.outside - hit;
      const std::size_t lower = chosen.size() + greedy_pack(problem_, in).size() + greedy_pack(problem_, outside).size();
      if (lower >= out.members.size()) return;
      auto [a, b] = solve_pair(*this, in, outside, depth, cfg_.parallel_branches);
      out.tally.absorb(a.tally);
      out.tally.absorb(b.tally);
      if (chosen.size() + a.members.size() + b.members.size() < out.members.size()) {
        std::vector<std::size_t> merged = chosen;
        merged.insert(merged.end(), a.members.begin(), a.members.end());
        merged.insert(merged.end(), b.members.begin(), b.members.end());
        out.members = std::move(merged);
      }
      return;
    }
    if (chosen.size() + 1 >= out.members.size()) return;
    const std::size_t target = first_in_size_order(problem_, uncovered);
    for (auto c : relevant_candidates(problem_, subset, target)) {
      if (std::find(forbidden.begin(), forbidden.end(), c) != forbidden.end()) continue;
      chosen.push_back(c);
      self(self, uncovered - cs.coverage[c], forbidden);
      chosen.pop_back();
      forbidden.push_back(c);
      if (chosen.size() + 1 >= out.members.size()) return;
    }
  };
  cover(cover, sep.boundary, {});
  return out;
}

Outcome PierceRecursion::pivot(const Bits& subset, int depth) const {
  Outcome out;
  out.tally.depth = depth;
  out.tally.fallbacks = 1;
  const std::size_t smallest = first_in_size_order(problem_, subset);
  if (smallest == Bits::npos) return out;
  const auto& cs = problem_.candidates();
  bool have = false;
  for (auto c : relevant_candidates(problem_, subset, smallest)) {
    Outcome branch = solve(subset - cs.coverage[c], depth + 1);
    out.tally.absorb(branch.tally);
    if (!have || branch.members.size() + 1 < out.members.size()) {
      out.members = std::move(branch.members);
      out.members.push_back(c);
      have = true;
    }
  }
  return out;
}

}  // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

SearchStats to_stats(const detail::Tally& tally, const detail::NodeBudget& budget, Clock::time_point start) {
  SearchStats stats;
  stats.nodes = tally.nodes;
  stats.depth = tally.depth;
  stats.separations = tally.separations;
  stats.fallbacks = tally.fallbacks;
  stats.optimal = !budget.exhausted();
  stats.wall_time = Clock::now() - start;
  return stats;
}

PackSolution finish_pack(const detail::Problem& problem, const detail::Outcome& outcome,
                         const detail::NodeBudget& budget, Clock::time_point start) {
  PackSolution sol;
  sol.witness = problem.ids(outcome.members);
  sol.value = static_cast<int>(sol.witness.size());
  sol.stats = to_stats(outcome.tally, budget, start);
  return sol;
}

PierceSolution finish_pierce(const detail::Problem& problem, const detail::Outcome& outcome,
                             const detail::NodeBudget& budget, Clock::time_point start) {
  PierceSolution sol;
  std::vector<std::size_t> indices = outcome.members;
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (auto c : indices) sol.witness.push_back(problem.candidates().points[c]);
  sol.value = static_cast<int>(sol.witness.size());
  sol.stats = to_stats(outcome.tally, budget, start);
  return sol;
}

template <typename Recursion, typename Finish>
auto run(const Instance& inst, const SolveConfig& cfg, bool pivot_root, bool needs_candidates, Finish finish) {
  cfg.validate();
  inst.validate();
  const auto start = Clock::now();
  const detail::Problem problem(inst.objects);
  if (needs_candidates) problem.candidates();
  detail::NodeBudget budget(cfg.node_cap);
  const Recursion rec(problem, cfg, budget);
  const auto all = problem.all();
  const auto outcome = pivot_root && all.any() ? rec.pivot(all, 0) : rec.solve(all, 0);
  return finish(problem, outcome, budget, start);
}

}  // namespace

PackSolution solve_pack(const Instance& inst, const SolveConfig& cfg) {
  return run<detail::PackRecursion>(inst, cfg, false, false, finish_pack);
}

PierceSolution solve_pierce(const Instance& inst, const SolveConfig& cfg) {
  return run<detail::PierceRecursion>(inst, cfg, false, true, finish_pierce);
}

PackSolution pivot_pack(const Instance& inst, const SolveConfig& cfg) {
  return run<detail::PackRecursion>(inst, cfg, true, false, finish_pack);
}

PierceSolution pivot_pierce(const Instance& inst, const SolveConfig& cfg) {
  return run<detail::PierceRecursion>(inst, cfg, true, true, finish_pierce);
}

std::size_t enumerate_boundary_independent_sets(std::span<const FatObject> boundary, int cap,
                                                const std::function<void(const std::vector<int>&)>& visit) {
  if (cap < 0) throw Error("cap must be non-negative");
  const detail::Problem problem(boundary);
  std::size_t count = 0;
  std::vector<std::size_t> current;
  auto each = [&](const std::vector<std::size_t>& members) {
    ++count;
    visit(problem.ids(members));
  };
  detail::for_each_independent_subset(problem, problem.all(), cap, current, each);
  return count;
}

std::vector<int> neighborhood(const Instance& inst, const std::vector<int>& ids) {
  const detail::Problem problem(inst.objects);
  detail::Bits members = problem.none();
  for (int id : ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= problem.size()) throw Error("object id out of range");
    members.set(static_cast<std::size_t>(id));
  }
  return problem.ids(problem.neighborhood(members));
}

}  // namespace fatsep
