#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "fatsep/error.hpp"
#include "fatsep/separator.hpp"
#include "support/checks.hpp"

using namespace fatsep;

namespace {

std::vector<FatObject> centred(std::span<const FatObject> objs, const BoxRegion& box) {
  std::vector<FatObject> out;
  for (const auto& o : objs) {
    if (center_in(o, box)) out.push_back(o);
  }
  return out;
}

// disjoint small disks on a jittered lattice inside [x0, x0+w] x [y0, y0+w]
std::vector<FatObject> cluster(double x0, double y0, int per_row, double w, double r) {
  std::vector<FatObject> objs;
  const double step = w / per_row;
  for (int i = 0; i < per_row; ++i) {
    for (int j = 0; j < per_row; ++j) {
      objs.push_back(FatObject::ball(0, {x0 + step * (i + 0.5), y0 + step * (j + 0.5)}, r));
    }
  }
  return objs;
}

double pairwise_distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Smallest cube of the search ladder, anchored at centre coordinates, whose
// centred objects reach `tau`. Exhaustive over every anchor combination.
double smallest_ladder_cube(std::span<const FatObject> objs, int tau, double ratio) {
  double lo = 0.0, hi = 0.0;
  for (std::size_t a = 0; a < objs.size(); ++a) {
    for (std::size_t b = a + 1; b < objs.size(); ++b) {
      const double d = pairwise_distance(center(objs[a]), center(objs[b]));
      hi = std::max(hi, d);
      if (d > 0 && (lo == 0 || d < lo)) lo = d;
    }
  }
  std::vector<double> ladder;
  for (double s = lo; s < hi; s *= ratio) ladder.push_back(s);
  ladder.push_back(hi);
  for (double side : ladder) {
    for (const auto& ax : objs) {
      for (const auto& ay : objs) {
        const double x = center(ax)[0], y = center(ay)[1];
        const BoxRegion box{Point{x, y}, Point{x + side, y + side}};
        if (greedy_pack(centred(objs, box)).value >= tau) return side * side;
      }
    }
  }
  return INFINITY;
}

}  // namespace

TEST_CASE("find_base_box on one cluster beats every ladder cube") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  std::vector<FatObject> objs;
  for (int i = 0; i < 9; ++i) objs.push_back(FatObject::ball(0, {pos(rng), pos(rng)}, 0.05));
  const auto inst = make_instance(2, objs);
  const auto box = find_base_box(inst.objects, 3);
  CHECK(box.aspect_ratio() <= 2.0 + 1e-9);
  CHECK(greedy_pack(centred(inst.objects, box)).value >= 3);
  CHECK(box.longest_side() <= 2.0);
  CHECK(box.volume() <= smallest_ladder_cube(inst.objects, 3, 1.05) * (1 + 1e-12));
}

TEST_CASE("find_base_box volume is never above the best ladder cube") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto inst = testing::random_instance(ShapeKind::Ball, 2, 14, seed, 1.0);
    const int g = greedy_pack(inst.objects).value;
    for (int tau : {1, (g + 1) / 2, g}) {
      const auto box = find_base_box(inst.objects, tau);
      REQUIRE(box.aspect_ratio() <= 2.0 + 1e-9);
      REQUIRE(greedy_pack(centred(inst.objects, box)).value >= tau);
      REQUIRE(box.volume() <= smallest_ladder_cube(inst.objects, tau, 1.05) * (1 + 1e-12));
    }
  }
}

TEST_CASE("find_base_box with the full measure of disjoint objects holds every centre") {
  const auto inst = make_instance(2, cluster(0, 0, 4, 8, 0.3));
  const auto box = find_base_box(inst.objects, static_cast<int>(inst.size()));
  CHECK(centred(inst.objects, box).size() == inst.size());
}

TEST_CASE("find_base_box picks one of two far clusters") {
  auto objs = cluster(0, 0, 3, 1, 0.05);
  objs.resize(5);
  auto far = cluster(1000, 0, 3, 1, 0.05);
  far.resize(5);
  objs.insert(objs.end(), far.begin(), far.end());
  const auto inst = make_instance(2, objs);
  const auto box = find_base_box(inst.objects, 5);
  const auto inside = centred(inst.objects, box);
  REQUIRE(inside.size() == 5);
  const bool left = std::all_of(inside.begin(), inside.end(), [](const FatObject& o) { return center(o)[0] < 500; });
  const bool right = std::all_of(inside.begin(), inside.end(), [](const FatObject& o) { return center(o)[0] > 500; });
  CHECK((left || right));
}

TEST_CASE("find_base_box rejects unreachable tau") {
  const auto inst = testing::disks({{0, 0, 1}, {0.5, 0, 1}});
  CHECK_THROWS_AS(find_base_box(inst.objects, 2), Error);
}

TEST_CASE("shell_sweep with no boundary objects") {
  const auto inst = testing::disks({{0, 0, 0.1}, {1, 1, 0.1}, {30, 30, 0.1}});
  const BoxRegion base{Point{-1, -1}, Point{2, 2}};
  const auto sweep = shell_sweep(inst.objects, base, 9);
  CHECK(sweep.m_star == 1.0);
  CHECK(sweep.boundary_measure == 0);
  CHECK(sweep.best_index == 0);
}

TEST_CASE("shell_sweep with g = 1 has one shell") {
  const auto inst = testing::disks({{0, 0, 1}});
  const auto sweep = shell_sweep(inst.objects, BoxRegion{Point{-3, -3}, Point{3, 3}}, 1);
  CHECK(sweep.shells.size() == 1);
  CHECK(sweep.m_star == 1.0);
}

TEST_CASE("shell_sweep shell count and minimum") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pos(0.0, 10.0);
  std::vector<FatObject> objs;
  for (int i = 0; i < 100; ++i) objs.push_back(FatObject::ball(0, {pos(rng), pos(rng)}, 0.15));
  const auto inst = make_instance(2, objs);
  const BoxRegion base{Point{3, 3}, Point{6, 6}};
  const auto sweep = shell_sweep(inst.objects, base, 25);
  REQUIRE(sweep.shells.size() == 3);
  int best = 1 << 30;
  int best_j = -1;
  for (int j = 0; j < 3; ++j) {
    // independent re-evaluation of the shell
    const BoxRegion shell = magnify(base, 1.0 + j / 5.0);
    std::vector<FatObject> crossing;
    for (const auto& o : inst.objects) {
      if (classify(o, shell) == RegionClass::Boundary) crossing.push_back(o);
    }
    const int m = greedy_pack(crossing).value;
    CHECK(m == sweep.shells[j].measure);
    if (m < best) {
      best = m;
      best_j = j;
    }
  }
  CHECK(sweep.boundary_measure == best);
  CHECK(sweep.best_index == best_j);
  CHECK(sweep.m_star == doctest::Approx(1.0 + best_j / 5.0));
}

TEST_CASE("separate splits two far clusters cleanly") {
  auto objs = cluster(0, 0, 4, 1, 0.04);
  objs.resize(10);
  auto far = cluster(500, 0, 4, 1, 0.04);
  far.resize(10);
  objs.insert(objs.end(), far.begin(), far.end());
  const auto inst = make_instance(2, objs);
  const auto sep = separate(inst.objects);
  CHECK(sep.mu_boundary.value == 0);
  CHECK(sep.inside_ids.size() == 10);
  CHECK(sep.outside_ids.size() == 10);
  CHECK(sep.balanced(0.8));
  CHECK_FALSE(sep.degenerate);
}

TEST_CASE("separate output is a partition consistent with classify") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int dim = 2 + int(seed % 2);
    const auto inst = testing::random_instance(seed % 3 ? ShapeKind::Ball : ShapeKind::Box, dim, 40, seed);
    const auto sep = separate(inst.objects);
    std::set<int> seen;
    auto mark = [&](const std::vector<int>& ids, RegionClass c) {
      for (int id : ids) {
        REQUIRE(seen.insert(id).second);
        REQUIRE(classify(inst.objects[id], sep.box) == c);
      }
    };
    mark(sep.inside_ids, RegionClass::Inside);
    mark(sep.outside_ids, RegionClass::Outside);
    mark(sep.boundary_ids, RegionClass::Boundary);
    REQUIRE(seen.size() == inst.size());
    REQUIRE(sep.box.aspect_ratio() <= 2.0 + 1e-9);
    REQUIRE(sep.box.contains(sep.base_box, 1e-9));
    REQUIRE(magnify(sep.base_box, std::pow(2.0, 1.0 / dim)).contains(sep.box, 1e-9));
    REQUIRE(sep.mu_total.value == greedy_pack(inst.objects).value);
  }
}

TEST_CASE("separate flags coincident centres") {
  const auto inst = testing::disks({{1, 1, 1}, {1, 1, 2}, {1, 1, 3}});
  const auto sep = separate(inst.objects);
  CHECK(sep.degenerate);
  CHECK(sep.boundary_ids.size() + sep.inside_ids.size() + sep.outside_ids.size() == 3);
}

TEST_CASE("separate needs two objects") {
  const auto inst = testing::disks({{0, 0, 1}});
  CHECK_THROWS_AS(separate(inst.objects), Error);
  SeparatorConfig bad;
  bad.epsilon = 0.6;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("shells: small objects never meet two shell boundaries, minimum under the mean") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 + trial % 2;
    const auto inst = testing::random_instance(ShapeKind::Mixed, dim, 60, 500 + trial, 4.0, 0.02, 1.0);
    const int g = greedy_pack(inst.objects).value;
    const auto base = find_base_box(inst.objects, std::max(1, g / 2));
    const auto sweep = shell_sweep(inst.objects, base, g);
    for (std::size_t a = 0; a < sweep.shells.size(); ++a) {
      for (std::size_t b = a + 1; b < sweep.shells.size(); ++b) {
        for (int x : sweep.shells[a].small_boundary_ids) {
          for (int y : sweep.shells[b].small_boundary_ids) {
            REQUIRE(x != y);
            REQUIRE_FALSE(intersects(inst.objects[x], inst.objects[y]));
          }
        }
      }
    }
    double sum = 0.0;
    int max = 0;
    for (const auto& s : sweep.shells) {
      sum += s.measure;
      max = std::max(max, s.measure);
    }
    REQUIRE(sum <= static_cast<double>(sweep.shells.size()) * max);
    REQUIRE(sweep.boundary_measure <= sum / static_cast<double>(sweep.shells.size()) + 1e-12);
  }
}

TEST_CASE("guaranteed threshold formula") {
  CHECK(guaranteed_separation_threshold(2, 0.5, 1.0) == doctest::Approx(std::pow(3.0 * 4 * 64 / 0.5, 2)));
}
