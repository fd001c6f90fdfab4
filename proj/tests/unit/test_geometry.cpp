#include <doctest.h>

#include <random>

#include "fatsep/error.hpp"
#include "fatsep/geometry.hpp"
#include "support/checks.hpp"

using namespace fatsep;

namespace {

BoxRegion region(std::vector<double> lo, std::vector<double> hi) { return BoxRegion(Point(lo), Point(hi)); }

FatObject random_object(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> pos(-3.0, 3.0), sz(0.2, 2.0), unit(0.0, 1.0);
  std::vector<double> c(dim);
  for (auto& x : c) x = pos(rng);
  const double s = sz(rng);
  if (unit(rng) < 0.5) return FatObject::ball(0, Point(c), s / 2);
  std::vector<double> lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) {
    const double side = i == 0 ? s : s * (0.5 + 0.5 * unit(rng));
    lo[i] = c[i] - side / 2;
    hi[i] = c[i] + side / 2;
  }
  return FatObject::box(0, Point(lo), Point(hi));
}

// Same centre, every extent reduced by `delta`.
FatObject shrink(const FatObject& o, double delta) {
  if (const auto* b = std::get_if<Ball>(&o.shape)) return FatObject::ball(0, b->center, b->radius - delta);
  const auto& box = std::get<AxisBox>(o.shape);
  std::vector<double> lo(box.low.coords().begin(), box.low.coords().end());
  std::vector<double> hi(box.high.coords().begin(), box.high.coords().end());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] += delta;
    hi[i] -= delta;
  }
  return FatObject::box(0, Point(lo), Point(hi));
}

}  // namespace

TEST_CASE("size is the side of the enclosing cube") {
  CHECK(size(FatObject::ball(0, {0, 0}, 1)) == 2.0);
  CHECK(size(FatObject::box(0, {0, 0}, {2, 1})) == 2.0);
  CHECK(size(FatObject::box(0, {0, 0, 0}, {1, 1, 1})) == 1.0);
}

TEST_CASE("size scales linearly") {
  const auto a = FatObject::box(0, {1, 1}, {2, 1.5});
  const auto b = FatObject::box(0, {3, 3}, {6, 4.5});
  CHECK(size(b) == doctest::Approx(3 * size(a)));
}

TEST_CASE("centre of a box is its midpoint") {
  CHECK(center(FatObject::box(0, {0, 0}, {4, 2})) == Point{2, 1});
  CHECK(center(FatObject::ball(0, {1, -1}, 3)) == Point{1, -1});
}

TEST_CASE("intersects examples") {
  CHECK_FALSE(intersects(FatObject::ball(0, {0, 0}, 1), FatObject::ball(1, {3, 0}, 1)));
  CHECK(intersects(FatObject::ball(0, {0, 0}, 1), FatObject::ball(1, {2, 0}, 1)));
  CHECK(intersects(FatObject::box(0, {0, 0}, {1, 1}), FatObject::ball(1, {2, 1}, 1.05)));
  CHECK_FALSE(intersects(FatObject::box(0, {0, 0}, {1, 1}), FatObject::ball(1, {2, 2}, 1.4)));
  CHECK(intersects(FatObject::box(0, {0, 0}, {1, 1}), FatObject::box(1, {1, 0.5}, {2, 1.5})));
}

TEST_CASE("intersects rejects mixed dimensions") {
  CHECK_THROWS_AS(intersects(FatObject::ball(0, {0, 0}, 1), FatObject::ball(1, {0, 0, 0}, 1)), Error);
}

TEST_CASE("intersects is symmetric, reflexive and agrees with point sampling") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int disagreements = 0, checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int dim = trial % 2 ? 3 : 2;
    const auto a = random_object(rng, dim);
    const auto b = random_object(rng, dim);
    REQUIRE(intersects(a, b) == intersects(b, a));
    REQUIRE(intersects(a, a));
    // sample the overlap of the two bounding boxes
    const auto ra = bounding_region(a), rb = bounding_region(b);
    std::vector<double> lo(dim), hi(dim);
    bool empty = false;
    for (int i = 0; i < dim; ++i) {
      lo[i] = std::max(ra.low()[i], rb.low()[i]);
      hi[i] = std::min(ra.high()[i], rb.high()[i]);
      empty = empty || lo[i] > hi[i];
    }
    bool sampled = false;
    if (!empty) {
      std::vector<double> p(dim);
      for (int s = 0; s < 100000 && !sampled; ++s) {
        for (int i = 0; i < dim; ++i) p[i] = lo[i] + (hi[i] - lo[i]) * unit(rng);
        sampled = testing::member(a, p) && testing::member(b, p);
      }
    }
    // a sampled common point is a certificate; a miss only counts when the
    // overlap is wide enough for the samples to resolve it
    if (sampled && !intersects(a, b)) ++disagreements;
    if (!sampled && intersects(a, b) && intersects(shrink(a, 0.05), shrink(b, 0.05))) ++disagreements;
    ++checked;
  }
  CHECK(checked == 1000);
  CHECK(disagreements == 0);
}

TEST_CASE("classify examples") {
  const auto box = region({-2, -2}, {2, 2});
  CHECK(classify(FatObject::ball(0, {0, 0}, 1), box) == RegionClass::Inside);
  CHECK(classify(FatObject::ball(0, {5, 5}, 1), box) == RegionClass::Outside);
  CHECK(classify(FatObject::ball(0, {2, 0}, 1), box) == RegionClass::Boundary);
  // touching from outside counts as boundary
  CHECK(classify(FatObject::ball(0, {3, 0}, 1), box) == RegionClass::Boundary);
  // touching from inside as well
  CHECK(classify(FatObject::box(0, {0, 0}, {2, 1}), box) == RegionClass::Boundary);
}

TEST_CASE("classify partitions and respects centres") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(-3.0, 3.0), side(0.5, 3.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const int dim = 2 + trial % 2;
    const auto obj = random_object(rng, dim);
    std::vector<double> lo(dim), hi(dim);
    for (int i = 0; i < dim; ++i) {
      lo[i] = pos(rng);
      hi[i] = lo[i] + side(rng);
    }
    const BoxRegion box{Point(lo), Point(hi)};
    const auto c = classify(obj, box);
    const bool in = c == RegionClass::Inside, out = c == RegionClass::Outside, bd = c == RegionClass::Boundary;
    REQUIRE(int(in) + int(out) + int(bd) == 1);
    if (in) REQUIRE(center_in(obj, box));
    if (out) REQUIRE_FALSE(center_in(obj, box));
    // Inside means the bounding box sits in the open interior
    if (in) {
      const auto r = bounding_region(obj);
      for (int i = 0; i < dim; ++i) REQUIRE((r.low()[i] > lo[i] && r.high()[i] < hi[i]));
    }
  }
}

TEST_CASE("center_in examples") {
  const auto box = region({-1, -1}, {1, 1});
  CHECK(center_in(FatObject::ball(0, {0, 0}, 10), box));
  CHECK_FALSE(center_in(FatObject::ball(0, {2, 0}, 0.1), box));
  CHECK(center_in(FatObject::box(0, {0, 0}, {4, 4}), region({1, 1}, {3, 3})));
}

TEST_CASE("magnify examples") {
  CHECK(magnify(region({0, 0}, {2, 2}), 1.0) == region({0, 0}, {2, 2}));
  CHECK(magnify(region({0, 0}, {2, 2}), 2.0) == region({-1, -1}, {3, 3}));
  const auto m = magnify(region({0, 0}, {2, 4}), 1.5);
  CHECK(m.low()[0] == doctest::Approx(-0.5));
  CHECK(m.low()[1] == doctest::Approx(-1));
  CHECK(m.high()[0] == doctest::Approx(2.5));
  CHECK(m.high()[1] == doctest::Approx(5));
  CHECK_THROWS_AS(magnify(region({0, 0}, {1, 1}), 0.9), Error);
}

TEST_CASE("magnified boxes nest and keep their aspect ratio") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(-5.0, 5.0), side(0.1, 4.0), mag(1.0, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> lo(3), hi(3);
    for (int i = 0; i < 3; ++i) {
      lo[i] = pos(rng);
      hi[i] = lo[i] + side(rng);
    }
    const BoxRegion box{Point(lo), Point(hi)};
    double m1 = mag(rng), m2 = mag(rng);
    if (m1 > m2) std::swap(m1, m2);
    const auto b1 = magnify(box, m1), b2 = magnify(box, m2);
    REQUIRE(b2.contains(b1, 1e-12));
    REQUIRE(b1.contains(box, 1e-12));
    REQUIRE(b1.aspect_ratio() == doctest::Approx(box.aspect_ratio()).epsilon(1e-12));
    for (int i = 0; i < 3; ++i) REQUIRE(b1.center()[i] == doctest::Approx(box.center()[i]));
  }
}

TEST_CASE("split_longest halves the volume and covers the box") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> pos(-5.0, 5.0), side(1.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 2 + trial % 3;
    std::vector<double> lo(dim), hi(dim);
    for (int i = 0; i < dim; ++i) {
      lo[i] = pos(rng);
      hi[i] = lo[i] + side(rng);
    }
    const BoxRegion box{Point(lo), Point(hi)};
    const auto [a, b] = split_longest(box);
    REQUIRE(a.volume() == doctest::Approx(box.volume() / 2));
    REQUIRE(b.volume() == doctest::Approx(box.volume() / 2));
    REQUIRE(box.contains(a));
    REQUIRE(box.contains(b));
    REQUIRE(a.aspect_ratio() <= 2.0 + 1e-9);
    REQUIRE(b.aspect_ratio() <= 2.0 + 1e-9);
    // the two halves share exactly one face
    int shared = 0;
    for (int i = 0; i < dim; ++i) shared += a.high()[i] == b.low()[i] ? 1 : 0;
    REQUIRE(shared == 1);
  }
}

TEST_CASE("split_longest examples") {
  auto [a, b] = split_longest(region({0, 0}, {4, 2}));
  CHECK(a == region({0, 0}, {2, 2}));
  CHECK(b == region({2, 0}, {4, 2}));
  auto [c, d] = split_longest(region({0, 0}, {2, 2}));
  CHECK(c == region({0, 0}, {1, 2}));
  CHECK(d == region({1, 0}, {2, 2}));
  auto [e, f] = split_longest(region({0, 0, 0}, {2, 2, 4}));
  CHECK(e == region({0, 0, 0}, {2, 2, 2}));
  CHECK(f == region({0, 0, 2}, {2, 2, 4}));
}

TEST_CASE("BoxRegion rejects empty boxes") {
  CHECK_THROWS_AS(region({0, 0}, {0, 1}), Error);
  CHECK_THROWS_AS(region({0, 0}, {1, -1}), Error);
}

TEST_CASE("validate rejects thin boxes and bad radii") {
  CHECK_THROWS_AS(validate(FatObject::box(0, {0, 0}, {3, 1})), Error);
  CHECK_NOTHROW(validate(FatObject::box(0, {0, 0}, {2, 1})));
  CHECK_THROWS_AS(validate(FatObject::ball(0, {0, 0}, 0)), Error);
  CHECK_THROWS_AS(validate(FatObject::ball(0, {0, 0}, -1)), Error);
}
