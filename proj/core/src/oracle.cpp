#include "fatsep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "fatsep/error.hpp"

namespace fatsep {

const char* to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::ExhaustiveSubset:
      return "exhaustive-subset";
    case OracleMethod::SetCoverExhaustive:
      return "set-cover-exhaustive";
    case OracleMethod::FineGrid:
      return "fine-grid";
  }
  return "?";
}

namespace {

using Mask = std::uint32_t;

void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw GuardError(std::string(what) + ": " + std::to_string(n) + " objects exceed the oracle limit of " +
                     std::to_string(limit));
  }
}

struct PackDfs {
  const std::vector<Mask>& conflicts;
  std::size_t n;
  Mask best = 0;
  int best_size = 0;

  void run(std::size_t i, Mask chosen, int size) {
    if (size + static_cast<int>(n - i) <= best_size) return;
    if (i == n) {
      best = chosen;
      best_size = size;
      return;
    }
    if (!(conflicts[i] & chosen)) run(i + 1, chosen | (Mask{1} << i), size + 1);
    run(i + 1, chosen, size);
  }
};

struct CoverDfs {
  const std::vector<Mask>& masks;
  Mask full;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best;
  bool found = false;

  void run(Mask covered) {
    if (found && chosen.size() >= best.size()) return;
    if (covered == full) {
      best = chosen;
      found = true;
      return;
    }
    int target = 0;
    while (covered & (Mask{1} << target)) ++target;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      if (!(masks[k] & (Mask{1} << target))) continue;
      chosen.push_back(k);
      run(covered | masks[k]);
      chosen.pop_back();
    }
  }
};

// Minimum cover over (point, mask) pairs; masks are deduplicated first and
// those strictly contained in another are dropped.
OracleResult min_cover(std::span<const FatObject> objs, const std::vector<Point>& points, OracleMethod method) {
  const std::size_t n = objs.size();
  std::map<Mask, std::size_t> unique;
  for (std::size_t p = 0; p < points.size(); ++p) {
    Mask m = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (contains_point(objs[k], points[p])) m |= Mask{1} << k;
    }
    if (m) unique.emplace(m, p);
  }
  std::vector<Mask> masks;
  std::vector<std::size_t> owners;
  for (const auto& [m, p] : unique) {
    const bool dominated = std::any_of(unique.begin(), unique.end(), [&](const auto& other) {
      return other.first != m && (other.first & m) == m;
    });
    if (dominated) continue;
    masks.push_back(m);
    owners.push_back(p);
  }
  OracleResult result;
  result.method = method;
  if (n == 0) return result;
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  Mask reachable = 0;
  for (auto m : masks) reachable |= m;
  if (reachable != full) throw Error("oracle point set misses an object");
  CoverDfs dfs{masks, full, {}, {}, false};
  dfs.run(0);
  for (auto k : dfs.best) result.points.push_back(points[owners[k]]);
  result.value = static_cast<int>(result.points.size());
  return result;
}

std::vector<Point> exhaustive_points(std::span<const FatObject> objs) {
  std::vector<Point> pts;
  if (objs.empty()) return pts;
  const std::size_t d = objs.front().dim();
  const bool boxes = std::all_of(objs.begin(), objs.end(), [](const FatObject& o) { return o.is_box(); });
  const bool balls = std::all_of(objs.begin(), objs.end(), [](const FatObject& o) { return o.is_ball(); });
  if (boxes) {
    // every corner of the common intersection of a set of boxes is reached
    // by combining low coordinates axis by axis
    std::vector<std::vector<double>> axis(d);
    for (const auto& o : objs) {
      for (std::size_t i = 0; i < d; ++i) axis[i].push_back(std::get<AxisBox>(o.shape).low[i]);
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= axis[i].size();
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<double> c(d);
      std::size_t rest = code;
      for (std::size_t i = 0; i < d; ++i) {
        c[i] = axis[i][rest % axis[i].size()];
        rest /= axis[i].size();
      }
      pts.emplace_back(std::move(c));
    }
    return pts;
  }
  if (!balls || d != 2) throw Error("oracle piercing supports all-box collections or planar disks");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto& a = std::get<Ball>(objs[i].shape);
    pts.push_back(Point{a.center[0], a.center[1] - a.radius});
    for (std::size_t j = 0; j < i; ++j) {
      const auto& b = std::get<Ball>(objs[j].shape);
      // circle crossings via the radical line
      const double ux = b.center[0] - a.center[0];
      const double uy = b.center[1] - a.center[1];
      const double dd = ux * ux + uy * uy;
      if (dd == 0.0) continue;
      const double t = 0.5 * (1.0 + (a.radius * a.radius - b.radius * b.radius) / dd);
      const double h2 = a.radius * a.radius / dd - t * t;
      if (h2 < -1e-12) continue;
      const double s = std::sqrt(std::max(0.0, h2));
      const double px = a.center[0] + t * ux;
      const double py = a.center[1] + t * uy;
      pts.push_back(Point{px - s * uy, py + s * ux});
      pts.push_back(Point{px + s * uy, py - s * ux});
    }
  }
  return pts;
}

}  // namespace

OracleResult brute_pack(std::span<const FatObject> objs) {
  guard(objs.size(), kBrutePackLimit, "brute_pack");
  const std::size_t n = objs.size();
  std::vector<Mask> conflicts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && intersects(objs[i], objs[j])) conflicts[i] |= Mask{1} << j;
    }
  }
  PackDfs dfs{conflicts, n};
  dfs.run(0, 0, 0);
  OracleResult result;
  result.method = OracleMethod::ExhaustiveSubset;
  for (std::size_t i = 0; i < n; ++i) {
    if (dfs.best & (Mask{1} << i)) result.ids.push_back(objs[i].id);
  }
  std::sort(result.ids.begin(), result.ids.end());
  result.value = dfs.best_size;
  return result;
}

OracleResult brute_pierce(std::span<const FatObject> objs) {
  guard(objs.size(), kBrutePierceLimit, "brute_pierce");
  return min_cover(objs, exhaustive_points(objs), OracleMethod::SetCoverExhaustive);
}

OracleResult fine_grid_pierce(std::span<const FatObject> objs, double resolution) {
  guard(objs.size(), kBrutePierceLimit, "fine_grid_pierce");
  if (objs.empty()) return OracleResult{0, {}, {}, OracleMethod::FineGrid};
  if (objs.front().dim() != 2) throw Error("fine-grid oracle is planar only");
  double lo[2] = {1e300, 1e300}, hi[2] = {-1e300, -1e300};
  for (const auto& o : objs) {
    const auto box = bounding_region(o);
    for (int i = 0; i < 2; ++i) {
      lo[i] = std::min(lo[i], box.low()[i]);
      hi[i] = std::max(hi[i], box.high()[i]);
    }
  }
  const double step = resolution * std::max(hi[0] - lo[0], hi[1] - lo[1]);
  const auto nx = static_cast<std::size_t>(std::ceil((hi[0] - lo[0]) / step)) + 1;
  const auto ny = static_cast<std::size_t>(std::ceil((hi[1] - lo[1]) / step)) + 1;
  // one representative point per distinct coverage mask
  std::map<Mask, Point> reps;
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const Point p{lo[0] + step * static_cast<double>(ix), lo[1] + step * static_cast<double>(iy)};
      Mask m = 0;
      for (std::size_t k = 0; k < objs.size(); ++k) {
        if (contains_point(objs[k], p)) m |= Mask{1} << k;
      }
      if (m) reps.emplace(m, p);
    }
  }
  std::vector<Point> pts;
  for (auto& [m, p] : reps) pts.push_back(p);
  return min_cover(objs, pts, OracleMethod::FineGrid);
}

}  // namespace fatsep
