#include "fatsep/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fatsep/error.hpp"
#include "problem.hpp"

namespace fatsep {

namespace {

enum class Family { Boxes, Disks };

Family family_of(std::span<const FatObject> objs) {
  if (objs.empty()) return Family::Boxes;
  const bool all_boxes = std::all_of(objs.begin(), objs.end(), [](const FatObject& o) { return o.is_box(); });
  if (all_boxes) return Family::Boxes;
  const bool all_balls = std::all_of(objs.begin(), objs.end(), [](const FatObject& o) { return o.is_ball(); });
  if (!all_balls) throw Error("piercing candidates need a single shape family (all boxes or all disks)");
  if (objs.front().dim() != 2) throw Error("piercing of balls is supported only in the plane (d = 2)");
  return Family::Disks;
}

// Per-axis sorted distinct low coordinates.
std::vector<std::vector<double>> box_axis_values(std::span<const FatObject> objs) {
  const std::size_t d = objs.front().dim();
  std::vector<std::vector<double>> values(d);
  for (const auto& o : objs) {
    const auto& b = std::get<AxisBox>(o.shape);
    for (std::size_t i = 0; i < d; ++i) values[i].push_back(b.low[i]);
  }
  for (auto& v : values) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return values;
}

std::vector<Point> disk_points(std::span<const FatObject> objs) {
  std::vector<Point> pts;
  for (const auto& o : objs) {
    const auto& b = std::get<Ball>(o.shape);
    pts.push_back(Point{b.center[0], b.center[1] - b.radius});
  }
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto& a = std::get<Ball>(objs[i].shape);
    for (std::size_t j = i + 1; j < objs.size(); ++j) {
      const auto& b = std::get<Ball>(objs[j].shape);
      const double dx = b.center[0] - a.center[0];
      const double dy = b.center[1] - a.center[1];
      const double dist = std::hypot(dx, dy);
      if (dist == 0.0) continue;
      if (dist > a.radius + b.radius + kGeomTolerance) continue;
      if (dist < std::abs(a.radius - b.radius) - kGeomTolerance) continue;
      const double along = (dist * dist + a.radius * a.radius - b.radius * b.radius) / (2.0 * dist);
      const double h = std::sqrt(std::max(0.0, a.radius * a.radius - along * along));
      const double mx = a.center[0] + along * dx / dist;
      const double my = a.center[1] + along * dy / dist;
      pts.push_back(Point{mx - h * dy / dist, my + h * dx / dist});
      if (h > 0.0) pts.push_back(Point{mx + h * dy / dist, my - h * dx / dist});
    }
  }
  return pts;
}

// Visits every grid point made of per-axis values; `visit` gets the point.
template <typename Visit>
void for_each_grid_point(const std::vector<std::vector<double>>& values, Visit&& visit) {
  const std::size_t d = values.size();
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> coords(d);
  for (const auto& v : values) {
    if (v.empty()) return;
  }
  while (true) {
    for (std::size_t i = 0; i < d; ++i) coords[i] = values[i][idx[i]];
    visit(coords, idx);
    std::size_t axis = 0;
    while (axis < d && ++idx[axis] == values[axis].size()) {
      idx[axis] = 0;
      ++axis;
    }
    if (axis == d) break;
  }
}

}  // namespace

bool piercing_supported(std::span<const FatObject> objs) {
  try {
    family_of(objs);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Point> candidate_pierce_points(std::span<const FatObject> objs) {
  if (objs.empty()) return {};
  std::vector<Point> out;
  if (family_of(objs) == Family::Disks) {
    for (auto& p : disk_points(objs)) {
      const bool pierces =
          std::any_of(objs.begin(), objs.end(), [&](const FatObject& o) { return contains_point(o, p); });
      if (pierces) out.push_back(std::move(p));
    }
    return out;
  }
  for_each_grid_point(box_axis_values(objs), [&](const std::vector<double>& coords, const auto&) {
    Point p(coords);
    const bool pierces =
        std::any_of(objs.begin(), objs.end(), [&](const FatObject& o) { return contains_point(o, p); });
    if (pierces) out.push_back(std::move(p));
  });
  return out;
}

namespace detail {

CandidateSet build_candidate_set(const Problem& problem) {
  const std::size_t n = problem.size();
  std::vector<FatObject> objs;
  objs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) objs.push_back(problem.object(i));

  // Unique coverage masks in generation order.
  std::map<Bits, std::size_t> seen;
  std::vector<Point> points;
  std::vector<Bits> masks;
  const auto add = [&](Point p, Bits mask) {
    if (mask.none()) return;
    if (seen.emplace(mask, points.size()).second) {
      points.push_back(std::move(p));
      masks.push_back(std::move(mask));
    }
  };

  if (n > 0 && family_of(objs) == Family::Boxes) {
    const auto values = box_axis_values(objs);
    // per-axis membership masks for each grid coordinate
    std::vector<std::vector<Bits>> axis_masks(values.size());
    for (std::size_t axis = 0; axis < values.size(); ++axis) {
      for (double v : values[axis]) {
        Bits m(n);
        for (std::size_t k = 0; k < n; ++k) {
          const auto& b = std::get<AxisBox>(objs[k].shape);
          if (v >= b.low[axis] - kGeomTolerance && v <= b.high[axis] + kGeomTolerance) m.set(k);
        }
        axis_masks[axis].push_back(std::move(m));
      }
    }
    for_each_grid_point(values, [&](const std::vector<double>& coords, const std::vector<std::size_t>& idx) {
      Bits mask = axis_masks[0][idx[0]];
      for (std::size_t axis = 1; axis < idx.size() && mask.any(); ++axis) mask &= axis_masks[axis][idx[axis]];
      add(Point(coords), std::move(mask));
    });
  } else if (n > 0) {
    for (auto& p : disk_points(objs)) {
      Bits mask(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (contains_point(objs[k], p)) mask.set(k);
      }
      add(std::move(p), std::move(mask));
    }
  }

  // Drop points whose coverage is contained in another point's coverage.
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::size_t> counts(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) counts[i] = masks[i].count();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });

  CandidateSet out;
  out.by_object.resize(n);
  for (auto i : order) {
    const bool dominated = std::any_of(out.coverage.begin(), out.coverage.end(),
                                       [&](const Bits& kept) { return masks[i].is_subset_of(kept); });
    if (dominated) continue;
    out.points.push_back(points[i]);
    out.coverage.push_back(masks[i]);
  }
  for (std::size_t c = 0; c < out.coverage.size(); ++c) {
    const auto& m = out.coverage[c];
    for (auto k = m.find_first(); k != Bits::npos; k = m.find_next(k)) out.by_object[k].push_back(c);
  }
  return out;
}

}  // namespace detail

}  // namespace fatsep
