#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "problem.hpp"

namespace fatsep::detail {

/// Positions of the greedy independent set.
std::vector<std::size_t> greedy_pack(const Problem& problem, const Bits& subset);

/// Same as greedy_pack(...).size() >= target, stopping early.
bool greedy_pack_reaches(const Problem& problem, const Bits& subset, std::size_t target);

/// Number of cliques in a greedy clique partition: an upper bound on the
/// packing number.
int clique_cover_bound(const Problem& problem, const Bits& subset);

/// Candidate indices of the greedy piercing set.
std::vector<std::size_t> greedy_pierce(const Problem& problem, const Bits& subset);

struct PackSearch {
  int value = 0;
  std::vector<std::size_t> members;
};

/// min(Pack(subset), limit) with a witness of that size.
PackSearch max_independent(const Problem& problem, const Bits& subset, int limit, std::int64_t& nodes,
                           bool clique_bound = true);

/// A minimum piercing set (candidate indices) if one with at most `budget`
/// points exists.
std::optional<std::vector<std::size_t>> min_cover(const Problem& problem, const Bits& subset, int budget,
                                                  std::int64_t& nodes);

/// Objects of `subset` containing at least one of the candidate points.
Bits covered(const Problem& problem, const Bits& subset, const std::vector<std::size_t>& points);

}  // namespace fatsep::detail
