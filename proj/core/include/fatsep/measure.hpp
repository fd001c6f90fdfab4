#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fatsep/geometry.hpp"

namespace fatsep {

enum class EstimateKind {
  Approximate,  // greedy: a lower bound for packing, a feasible upper bound for piercing
  Exact,
};

/// Value of the packing or piercing measure on a sub-collection, with a
/// feasible witness: object ids for packing, points for piercing.
struct MeasureEstimate {
  int value = 0;
  EstimateKind kind = EstimateKind::Approximate;
  std::vector<int> ids;
  std::vector<Point> points;
};

/// Smallest-first maximal independent set. Ties on size go to the lower id.
MeasureEstimate greedy_pack(std::span<const FatObject> objs);

/// Smallest unpierced object first: every unpierced object meeting it is
/// pierced with candidate points chosen by maximum coverage.
MeasureEstimate greedy_pierce(std::span<const FatObject> objs);

/// Exact packing number when it is at most `cap`; std::nullopt signals
/// overflow (the packing number exceeds `cap`).
std::optional<MeasureEstimate> exact_small_pack(std::span<const FatObject> objs, int cap);

/// Exact piercing number when it is at most `cap`; std::nullopt on overflow.
std::optional<MeasureEstimate> exact_small_pierce(std::span<const FatObject> objs, int cap);

}  // namespace fatsep
