#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace fatsep {

/// Absolute tolerance applied to boundary coincidences. Near-tangent
/// configurations are resolved towards "touching".
inline constexpr double kGeomTolerance = 1e-9;

/// Default bound on the aspect ratio of an AxisBox object.
inline constexpr double kMaxObjectAspect = 2.0;

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<double> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

struct Ball {
  Point center;
  double radius = 0.0;
};

struct AxisBox {
  Point low;
  Point high;
};

/// A ball or an axis-aligned box of bounded aspect ratio.
struct FatObject {
  int id = 0;
  std::variant<Ball, AxisBox> shape;

  static FatObject ball(int id, Point center, double radius);
  static FatObject box(int id, Point low, Point high);

  std::size_t dim() const;
  bool is_ball() const { return std::holds_alternative<Ball>(shape); }
  bool is_box() const { return std::holds_alternative<AxisBox>(shape); }

  friend bool operator==(const FatObject& a, const FatObject& b);
};

/// Closed axis-aligned box used as a search region or separator.
class BoxRegion {
 public:
  /// Throws fatsep::Error unless low[i] < high[i] on every axis.
  BoxRegion(Point low, Point high);

  const Point& low() const { return low_; }
  const Point& high() const { return high_; }
  std::size_t dim() const { return low_.dim(); }

  double side(std::size_t axis) const { return high_[axis] - low_[axis]; }
  /// Side lengths in ascending order.
  std::vector<double> sorted_sides() const;
  double longest_side() const;
  double shortest_side() const;
  double aspect_ratio() const { return longest_side() / shortest_side(); }
  double volume() const;
  Point center() const;

  bool contains(const Point& p) const;
  bool contains(const BoxRegion& other, double tolerance = 0.0) const;

  friend bool operator==(const BoxRegion&, const BoxRegion&) = default;

 private:
  Point low_;
  Point high_;
};

std::ostream& operator<<(std::ostream& os, const BoxRegion& box);

enum class RegionClass { Inside, Outside, Boundary };

const char* to_string(RegionClass c);

/// Side of the smallest enclosing axis-aligned cube.
double size(const FatObject& obj);

/// Ball centre or box midpoint.
Point center(const FatObject& obj);

/// Smallest axis-aligned box containing the object.
BoxRegion bounding_region(const FatObject& obj);

/// Throws unless the object is well formed: finite coordinates, positive
/// radius, low < high and aspect ratio at most `max_aspect`.
void validate(const FatObject& obj, double max_aspect = kMaxObjectAspect);

/// Closed-set intersection test. Symmetric and reflexive.
/// Throws on dimension mismatch.
bool intersects(const FatObject& a, const FatObject& b);

bool contains_point(const FatObject& obj, const Point& p);

/// Inside: the object lies in the open interior of the box.
/// Outside: the object misses the closed box.
/// Boundary: everything else, i.e. the object meets the box boundary.
RegionClass classify(const FatObject& obj, const BoxRegion& box);

bool center_in(const FatObject& obj, const BoxRegion& box);

/// Same centre, every side scaled by `m`. Requires m >= 1.
BoxRegion magnify(const BoxRegion& box, double m);

/// Cuts the box through the middle of its longest side (lowest axis on ties).
std::pair<BoxRegion, BoxRegion> split_longest(const BoxRegion& box);

}  // namespace fatsep
