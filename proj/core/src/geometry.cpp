#include "fatsep/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <type_traits>

#include "fatsep/error.hpp"

namespace fatsep {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Squared Euclidean distance from p to the closed box [low, high].
double squared_distance_to_box(const Point& p, const Point& low, const Point& high) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    double gap = 0.0;
    if (p[i] < low[i]) {
      gap = low[i] - p[i];
    } else if (p[i] > high[i]) {
      gap = p[i] - high[i];
    }
    sum += gap * gap;
  }
  return sum;
}

double squared_distance(const Point& a, const Point& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double t = a[i] - b[i];
    sum += t * t;
  }
  return sum;
}

bool ball_ball(const Ball& a, const Ball& b) {
  const double reach = a.radius + b.radius + kGeomTolerance;
  return squared_distance(a.center, b.center) <= reach * reach;
}

bool ball_box(const Ball& a, const AxisBox& b) {
  const double reach = a.radius + kGeomTolerance;
  return squared_distance_to_box(a.center, b.low, b.high) <= reach * reach;
}

bool box_box(const AxisBox& a, const AxisBox& b) {
  for (std::size_t i = 0; i < a.low.dim(); ++i) {
    if (a.high[i] < b.low[i] - kGeomTolerance || b.high[i] < a.low[i] - kGeomTolerance) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ", ";
    os << p[i];
  }
  return os << ')';
}

FatObject FatObject::ball(int id, Point center, double radius) {
  return FatObject{id, Ball{std::move(center), radius}};
}

FatObject FatObject::box(int id, Point low, Point high) {
  return FatObject{id, AxisBox{std::move(low), std::move(high)}};
}

std::size_t FatObject::dim() const {
  return std::visit(
      [](const auto& s) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Ball>) {
          return s.center.dim();
        } else {
          return s.low.dim();
        }
      },
      shape);
}

bool operator==(const FatObject& a, const FatObject& b) {
  if (a.id != b.id || a.shape.index() != b.shape.index()) return false;
  if (a.is_ball()) {
    const auto& x = std::get<Ball>(a.shape);
    const auto& y = std::get<Ball>(b.shape);
    return x.center == y.center && x.radius == y.radius;
  }
  const auto& x = std::get<AxisBox>(a.shape);
  const auto& y = std::get<AxisBox>(b.shape);
  return x.low == y.low && x.high == y.high;
}

BoxRegion::BoxRegion(Point low, Point high) : low_(std::move(low)), high_(std::move(high)) {
  require_same_dim(low_.dim(), high_.dim());
  if (low_.dim() == 0) throw Error("box region needs at least one axis");
  for (std::size_t i = 0; i < low_.dim(); ++i) {
    if (!(low_[i] < high_[i])) {
      throw Error("box region must satisfy low < high on every axis");
    }
  }
}

std::vector<double> BoxRegion::sorted_sides() const {
  std::vector<double> sides(dim());
  for (std::size_t i = 0; i < dim(); ++i) sides[i] = side(i);
  std::sort(sides.begin(), sides.end());
  return sides;
}

double BoxRegion::longest_side() const {
  double best = side(0);
  for (std::size_t i = 1; i < dim(); ++i) best = std::max(best, side(i));
  return best;
}

double BoxRegion::shortest_side() const {
  double best = side(0);
  for (std::size_t i = 1; i < dim(); ++i) best = std::min(best, side(i));
  return best;
}

double BoxRegion::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < dim(); ++i) v *= side(i);
  return v;
}

Point BoxRegion::center() const {
  std::vector<double> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = 0.5 * (low_[i] + high_[i]);
  return Point(std::move(c));
}

bool BoxRegion::contains(const Point& p) const {
  require_same_dim(dim(), p.dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (p[i] < low_[i] || p[i] > high_[i]) return false;
  }
  return true;
}

bool BoxRegion::contains(const BoxRegion& other, double tolerance) const {
  require_same_dim(dim(), other.dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (other.low_[i] < low_[i] - tolerance || other.high_[i] > high_[i] + tolerance) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const BoxRegion& box) {
  return os << box.low() << '-' << box.high();
}

const char* to_string(RegionClass c) {
  switch (c) {
    case RegionClass::Inside:
      return "inside";
    case RegionClass::Outside:
      return "outside";
    case RegionClass::Boundary:
      return "boundary";
  }
  return "?";
}

double size(const FatObject& obj) {
  if (obj.is_ball()) return 2.0 * std::get<Ball>(obj.shape).radius;
  const auto& b = std::get<AxisBox>(obj.shape);
  double longest = 0.0;
  for (std::size_t i = 0; i < b.low.dim(); ++i) longest = std::max(longest, b.high[i] - b.low[i]);
  return longest;
}

Point center(const FatObject& obj) {
  if (obj.is_ball()) return std::get<Ball>(obj.shape).center;
  const auto& b = std::get<AxisBox>(obj.shape);
  std::vector<double> c(b.low.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (b.low[i] + b.high[i]);
  return Point(std::move(c));
}

BoxRegion bounding_region(const FatObject& obj) {
  if (obj.is_box()) {
    const auto& b = std::get<AxisBox>(obj.shape);
    return BoxRegion(b.low, b.high);
  }
  const auto& ball = std::get<Ball>(obj.shape);
  std::vector<double> lo(ball.center.dim()), hi(ball.center.dim());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = ball.center[i] - ball.radius;
    hi[i] = ball.center[i] + ball.radius;
  }
  return BoxRegion(Point(std::move(lo)), Point(std::move(hi)));
}

void validate(const FatObject& obj, double max_aspect) {
  const auto finite = [](const Point& p) {
    return std::all_of(p.coords().begin(), p.coords().end(), [](double v) { return std::isfinite(v); });
  };
  if (obj.dim() < 2) throw Error("object " + std::to_string(obj.id) + ": dimension must be at least 2");
  if (obj.is_ball()) {
    const auto& b = std::get<Ball>(obj.shape);
    if (!finite(b.center)) throw Error("object " + std::to_string(obj.id) + ": non-finite centre");
    if (!(b.radius > 0.0) || !std::isfinite(b.radius)) {
      throw Error("object " + std::to_string(obj.id) + ": radius must be positive");
    }
    return;
  }
  const auto& b = std::get<AxisBox>(obj.shape);
  require_same_dim(b.low.dim(), b.high.dim());
  if (!finite(b.low) || !finite(b.high)) throw Error("object " + std::to_string(obj.id) + ": non-finite corner");
  double lo_side = 0.0, hi_side = 0.0;
  for (std::size_t i = 0; i < b.low.dim(); ++i) {
    const double s = b.high[i] - b.low[i];
    if (!(s > 0.0)) throw Error("object " + std::to_string(obj.id) + ": box needs low < high");
    lo_side = i == 0 ? s : std::min(lo_side, s);
    hi_side = std::max(hi_side, s);
  }
  if (hi_side > max_aspect * lo_side * (1.0 + 1e-12)) {
    throw Error("object " + std::to_string(obj.id) + ": box aspect ratio exceeds " + std::to_string(max_aspect));
  }
}

bool intersects(const FatObject& a, const FatObject& b) {
  require_same_dim(a.dim(), b.dim());
  if (a.is_ball()) {
    const auto& x = std::get<Ball>(a.shape);
    if (b.is_ball()) return ball_ball(x, std::get<Ball>(b.shape));
    return ball_box(x, std::get<AxisBox>(b.shape));
  }
  const auto& x = std::get<AxisBox>(a.shape);
  if (b.is_ball()) return ball_box(std::get<Ball>(b.shape), x);
  return box_box(x, std::get<AxisBox>(b.shape));
}

bool contains_point(const FatObject& obj, const Point& p) {
  require_same_dim(obj.dim(), p.dim());
  if (obj.is_ball()) {
    const auto& b = std::get<Ball>(obj.shape);
    const double reach = b.radius + kGeomTolerance;
    return squared_distance(b.center, p) <= reach * reach;
  }
  const auto& b = std::get<AxisBox>(obj.shape);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] < b.low[i] - kGeomTolerance || p[i] > b.high[i] + kGeomTolerance) return false;
  }
  return true;
}

RegionClass classify(const FatObject& obj, const BoxRegion& box) {
  require_same_dim(obj.dim(), box.dim());
  const Point& lo = box.low();
  const Point& hi = box.high();
  if (obj.is_ball()) {
    const auto& b = std::get<Ball>(obj.shape);
    const double reach = b.radius + kGeomTolerance;
    if (squared_distance_to_box(b.center, lo, hi) > reach * reach) return RegionClass::Outside;
    for (std::size_t i = 0; i < box.dim(); ++i) {
      if (!(b.center[i] - b.radius > lo[i] + kGeomTolerance && b.center[i] + b.radius < hi[i] - kGeomTolerance)) {
        return RegionClass::Boundary;
      }
    }
    return RegionClass::Inside;
  }
  const auto& b = std::get<AxisBox>(obj.shape);
  bool inside = true;
  for (std::size_t i = 0; i < box.dim(); ++i) {
    if (b.high[i] < lo[i] - kGeomTolerance || b.low[i] > hi[i] + kGeomTolerance) return RegionClass::Outside;
    if (!(b.low[i] > lo[i] + kGeomTolerance && b.high[i] < hi[i] - kGeomTolerance)) inside = false;
  }
  return inside ? RegionClass::Inside : RegionClass::Boundary;
}

bool center_in(const FatObject& obj, const BoxRegion& box) { return box.contains(center(obj)); }

BoxRegion magnify(const BoxRegion& box, double m) {
  if (!(m >= 1.0)) throw Error("magnification factor must be >= 1");
  std::vector<double> lo(box.dim()), hi(box.dim());
  for (std::size_t i = 0; i < box.dim(); ++i) {
    const double c = 0.5 * (box.low()[i] + box.high()[i]);
    const double half = 0.5 * m * box.side(i);
    lo[i] = c - half;
    hi[i] = c + half;
  }
  return BoxRegion(Point(std::move(lo)), Point(std::move(hi)));
}

std::pair<BoxRegion, BoxRegion> split_longest(const BoxRegion& box) {
  std::size_t axis = 0;
  for (std::size_t i = 1; i < box.dim(); ++i) {
    if (box.side(i) > box.side(axis)) axis = i;
  }
  const double mid = 0.5 * (box.low()[axis] + box.high()[axis]);
  Point first_high = box.high();
  first_high[axis] = mid;
  Point second_low = box.low();
  second_low[axis] = mid;
  return {BoxRegion(box.low(), std::move(first_high)), BoxRegion(std::move(second_low), box.high())};
}

}  // namespace fatsep
