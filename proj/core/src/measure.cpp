#include "fatsep/measure.hpp"

#include <algorithm>
#include <numeric>

#include "measure_impl.hpp"

namespace fatsep {

namespace detail {

std::vector<std::size_t> greedy_pack(const Problem& problem, const Bits& subset) {
  std::vector<std::size_t> chosen;
  Bits blocked(problem.size());
  for (auto i : problem.size_order()) {
    if (!subset.test(i) || blocked.test(i)) continue;
    chosen.push_back(i);
    blocked |= problem.closed_neighborhood(i);
  }
  return chosen;
}

bool greedy_pack_reaches(const Problem& problem, const Bits& subset, std::size_t target) {
  if (target == 0) return true;
  std::size_t count = 0;
  Bits blocked(problem.size());
  for (auto i : problem.size_order()) {
    if (!subset.test(i) || blocked.test(i)) continue;
    if (++count >= target) return true;
    blocked |= problem.closed_neighborhood(i);
  }
  return false;
}

std::vector<std::size_t> greedy_pierce(const Problem& problem, const Bits& subset) {
  std::vector<std::size_t> points;
  if (subset.none()) return points;
  const auto& cs = problem.candidates();
  Bits pierced(problem.size());
  for (auto o : problem.size_order()) {
    if (!subset.test(o) || pierced.test(o)) continue;
    Bits pending = problem.closed_neighborhood(o) & subset;
    pending -= pierced;
    while (pending.any()) {
      std::size_t best = cs.points.size();
      std::size_t best_score = 0;
      for (auto k = pending.find_first(); k != Bits::npos; k = pending.find_next(k)) {
        for (auto c : cs.by_object[k]) {
          const std::size_t s = (cs.coverage[c] & pending).count();
          if (s > best_score || (s == best_score && c < best)) {
            best_score = s;
            best = c;
          }
        }
      }
      points.push_back(best);
      pierced |= cs.coverage[best] & subset;
      pending -= cs.coverage[best];
    }
  }
  return points;
}

Bits covered(const Problem& problem, const Bits& subset, const std::vector<std::size_t>& points) {
  const auto& cs = problem.candidates();
  Bits out(problem.size());
  for (auto c : points) out |= cs.coverage[c];
  return out & subset;
}

namespace {

std::size_t min_degree_vertex(const Problem& problem, const Bits& subset, std::size_t& degree) {
  std::size_t best = Bits::npos;
  degree = 0;
  for (auto i : problem.size_order()) {
    if (!subset.test(i)) continue;
    const std::size_t deg = problem.degree_in(i, subset);
    if (best == Bits::npos || deg < degree) {
      best = i;
      degree = deg;
    }
  }
  return best;
}

}  // namespace

int clique_cover_bound(const Problem& problem, const Bits& subset) {
  Bits left = subset;
  int count = 0;
  for (auto i : problem.size_order()) {
    if (!left.test(i)) continue;
    ++count;
    Bits common = problem.closed_neighborhood(i) & left;
    while (common.any()) {
      const auto u = common.find_first();
      left.reset(u);
      common &= problem.closed_neighborhood(u);
      common.reset(u);
    }
    if (left.none()) break;
  }
  return count;
}

PackSearch max_independent(const Problem& problem, const Bits& subset, int limit, std::int64_t& nodes,
                           bool clique_bound) {
  ++nodes;
  PackSearch out;
  if (subset.none() || limit <= 0) return out;

  auto comps = problem.components(subset);
  if (comps.size() > 1) {
    for (const auto& comp : comps) {
      auto part = max_independent(problem, comp, limit - out.value, nodes, clique_bound);
      out.value += part.value;
      out.members.insert(out.members.end(), part.members.begin(), part.members.end());
      if (out.value >= limit) break;
    }
    return out;
  }

  std::size_t degree = 0;
  const std::size_t v = min_degree_vertex(problem, subset, degree);
  if (degree <= 1) {
    // a vertex of degree <= 1 belongs to some maximum independent set
    Bits rest = subset - problem.closed_neighborhood(v);
    auto sub = max_independent(problem, rest, limit - 1, nodes, clique_bound);
    out.value = sub.value + 1;
    out.members = std::move(sub.members);
    out.members.push_back(v);
    return out;
  }

  // every maximal independent set meets the closed neighbourhood of v
  const Bits branch = problem.closed_neighborhood(v) & subset;
  for (auto u : problem.size_order()) {
    if (!branch.test(u)) continue;
    Bits rest = subset - problem.closed_neighborhood(u);
    const int bound = clique_bound ? clique_cover_bound(problem, rest) : static_cast<int>(rest.count());
    if (1 + bound <= out.value) continue;
    auto sub = max_independent(problem, rest, limit - 1, nodes, clique_bound);
    if (sub.value + 1 > out.value) {
      out.value = sub.value + 1;
      out.members = std::move(sub.members);
      out.members.push_back(u);
    }
    if (out.value >= limit) break;
  }
  return out;
}

std::optional<std::vector<std::size_t>> min_cover(const Problem& problem, const Bits& subset, int budget,
                                                  std::int64_t& nodes) {
  ++nodes;
  if (subset.none()) return std::vector<std::size_t>{};
  if (budget <= 0) return std::nullopt;
  const int lower = static_cast<int>(greedy_pack(problem, subset).size());
  if (lower > budget) return std::nullopt;

  auto comps = problem.components(subset);
  if (comps.size() > 1) {
    std::vector<int> bounds;
    for (const auto& comp : comps) bounds.push_back(static_cast<int>(greedy_pack(problem, comp).size()));
    int still_needed = std::accumulate(bounds.begin(), bounds.end(), 0);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      still_needed -= bounds[k];
      const int room = budget - static_cast<int>(out.size()) - still_needed;
      auto part = min_cover(problem, comps[k], room, nodes);
      if (!part) return std::nullopt;
      out.insert(out.end(), part->begin(), part->end());
    }
    return out;
  }

  const auto& cs = problem.candidates();
  std::size_t pivot = Bits::npos;
  for (auto i : problem.size_order()) {
    if (subset.test(i)) {
      pivot = i;
      break;
    }
  }
  std::optional<std::vector<std::size_t>> best;
  for (auto c : relevant_candidates(problem, subset, pivot)) {
    const int room = best ? static_cast<int>(best->size()) - 1 : budget;
    if (room < lower) break;
    Bits rest = subset - cs.coverage[c];
    auto sub = min_cover(problem, rest, room - 1, nodes);
    if (sub) {
      sub->push_back(c);
      best = std::move(sub);
      if (static_cast<int>(best->size()) == lower) break;
    }
  }
  return best;
}

}  // namespace detail

namespace {

MeasureEstimate pack_estimate(const detail::Problem& problem, const std::vector<std::size_t>& members,
                              EstimateKind kind) {
  MeasureEstimate est;
  est.kind = kind;
  est.ids = problem.ids(members);
  est.value = static_cast<int>(est.ids.size());
  return est;
}

MeasureEstimate pierce_estimate(const detail::Problem& problem, const std::vector<std::size_t>& points,
                                EstimateKind kind) {
  MeasureEstimate est;
  est.kind = kind;
  std::vector<std::size_t> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  for (auto c : sorted) est.points.push_back(problem.candidates().points[c]);
  est.value = static_cast<int>(est.points.size());
  return est;
}

}  // namespace

MeasureEstimate greedy_pack(std::span<const FatObject> objs) {
  const detail::Problem problem(objs);
  return pack_estimate(problem, detail::greedy_pack(problem, problem.all()), EstimateKind::Approximate);
}

MeasureEstimate greedy_pierce(std::span<const FatObject> objs) {
  const detail::Problem problem(objs);
  return pierce_estimate(problem, detail::greedy_pierce(problem, problem.all()), EstimateKind::Approximate);
}

std::optional<MeasureEstimate> exact_small_pack(std::span<const FatObject> objs, int cap) {
  const detail::Problem problem(objs);
  std::int64_t nodes = 0;
  auto found = detail::max_independent(problem, problem.all(), cap + 1, nodes);
  if (found.value > cap) return std::nullopt;
  return pack_estimate(problem, found.members, EstimateKind::Exact);
}

std::optional<MeasureEstimate> exact_small_pierce(std::span<const FatObject> objs, int cap) {
  const detail::Problem problem(objs);
  std::int64_t nodes = 0;
  auto found = detail::min_cover(problem, problem.all(), cap, nodes);
  if (!found) return std::nullopt;
  return pierce_estimate(problem, *found, EstimateKind::Exact);
}

}  // namespace fatsep
