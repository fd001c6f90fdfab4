#pragma once

#include <span>
#include <vector>

#include "fatsep/geometry.hpp"

namespace fatsep {

/// True when candidate_pierce_points supports the collection: all boxes in
/// any dimension, or all balls in the plane.
bool piercing_supported(std::span<const FatObject> objs);

/// A finite point set from which some optimal piercing of `objs` can be
/// drawn. Boxes: the grid of per-axis low coordinates. Disks: the lowest
/// point of every disk plus all pairwise circle intersection points. Only
/// points that pierce at least one object are returned.
///
/// Throws fatsep::Error for mixed collections and for balls with d != 2.
std::vector<Point> candidate_pierce_points(std::span<const FatObject> objs);

}  // namespace fatsep
