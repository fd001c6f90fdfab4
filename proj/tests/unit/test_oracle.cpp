#include <doctest.h>

#include <algorithm>
#include <random>

#include "fatsep/error.hpp"
#include "fatsep/oracle.hpp"
#include "support/checks.hpp"

using namespace fatsep;
using testing::disks;

namespace {

Instance spaced(int k) {
  std::vector<FatObject> objs;
  for (int i = 0; i < k; ++i) objs.push_back(FatObject::ball(0, {10.0 * i, 0}, 1));
  return make_instance(2, std::move(objs));
}

// Reject near-tangent pairs so a grid of spacing 1e-3 resolves every
// non-empty intersection pattern.
bool general_position(const Instance& inst) {
  for (std::size_t a = 0; a < inst.size(); ++a) {
    for (std::size_t b = a + 1; b < inst.size(); ++b) {
      const auto& x = std::get<Ball>(inst.objects[a].shape);
      const auto& y = std::get<Ball>(inst.objects[b].shape);
      const double d = std::hypot(x.center[0] - y.center[0], x.center[1] - y.center[1]);
      if (std::abs(d - (x.radius + y.radius)) < 0.05) return false;
      if (std::abs(d - std::abs(x.radius - y.radius)) < 0.05) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("brute_pack examples") {
  CHECK(brute_pack(spaced(3).objects).value == 3);
  CHECK(brute_pack(disks({{0, 0, 1}, {0.1, 0, 1}, {0.2, 0, 1}, {0, 0.1, 1}, {0.1, 0.1, 1}}).objects).value == 1);
  const auto path = brute_pack(disks({{0, 0, 1}, {1.8, 0, 1}, {3.6, 0, 1}}).objects);
  CHECK(path.value == 2);
  CHECK(path.ids == std::vector<int>{0, 2});
  CHECK(path.method == OracleMethod::ExhaustiveSubset);
}

TEST_CASE("brute_pierce examples") {
  CHECK(brute_pierce(spaced(4).objects).value == 4);
  CHECK(brute_pierce(disks({{0, 0, 1}, {0.5, 0, 1}, {0, 0.5, 1}}).objects).value == 1);
  CHECK(brute_pierce(std::vector<FatObject>{}).value == 0);
  const auto r = brute_pierce(disks({{0, 0, 1}, {1.5, 0, 1}, {3, 0, 1}}).objects);
  CHECK(r.value == 2);
  CHECK(r.method == OracleMethod::SetCoverExhaustive);
}

TEST_CASE("guards") {
  const auto big = testing::random_instance(ShapeKind::Ball, 2, 25, 1);
  CHECK_THROWS_AS(brute_pack(big.objects), GuardError);
  const auto mid = testing::random_instance(ShapeKind::Ball, 2, 15, 1);
  CHECK_THROWS_AS(brute_pierce(mid.objects), GuardError);
  CHECK_THROWS_AS(fine_grid_pierce(mid.objects), GuardError);
}

TEST_CASE("brute_pack is invariant under input permutation") {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto inst = testing::random_instance(ShapeKind::Mixed, 2, 16, seed);
    const int value = brute_pack(inst.objects).value;
    auto objs = inst.objects;
    std::shuffle(objs.begin(), objs.end(), rng);
    const auto shuffled = make_instance(2, objs);
    const auto r = brute_pack(shuffled.objects);
    REQUIRE(r.value == value);
    REQUIRE(testing::pairwise_disjoint(shuffled, r.ids));
  }
}

TEST_CASE("brute_pierce witnesses pierce and agree with the fine grid") {
  int compared = 0;
  for (std::uint64_t seed = 1; compared < 30 && seed < 2000; ++seed) {
    const auto inst = testing::random_instance(ShapeKind::Ball, 2, 8, seed, 2.0);
    if (!general_position(inst)) continue;
    const auto a = brute_pierce(inst.objects);
    REQUIRE(testing::pierces_all(inst, a.points));
    const auto b = fine_grid_pierce(inst.objects);
    REQUIRE(testing::pierces_all(inst, b.points));
    REQUIRE(a.value == b.value);
    ++compared;
  }
  CHECK(compared == 30);
}

TEST_CASE("fine grid is planar only") {
  const auto inst = make_instance(3, {FatObject::box(0, {0, 0, 0}, {1, 1, 1})});
  CHECK_THROWS_AS(fine_grid_pierce(inst.objects), Error);
}
