#pragma once

#include <span>
#include <vector>

#include "fatsep/geometry.hpp"

namespace fatsep {

enum class OracleMethod { ExhaustiveSubset, SetCoverExhaustive, FineGrid };

const char* to_string(OracleMethod m);

/// Brute-force ground truth. Shares nothing with the solvers beyond the
/// geometric predicates.
struct OracleResult {
  int value = 0;
  std::vector<int> ids;       // packing witness
  std::vector<Point> points;  // piercing witness
  OracleMethod method = OracleMethod::ExhaustiveSubset;
};

inline constexpr std::size_t kBrutePackLimit = 24;
inline constexpr std::size_t kBrutePierceLimit = 14;

/// Maximum independent set by subset search. Throws GuardError beyond
/// kBrutePackLimit objects.
OracleResult brute_pack(std::span<const FatObject> objs);

/// Minimum set cover over an exhaustive candidate point list (grid of low
/// corners for boxes; lowest points and circle crossings for disks).
/// Throws GuardError beyond kBrutePierceLimit objects.
OracleResult brute_pierce(std::span<const FatObject> objs);

/// Minimum set cover over a uniform grid covering the bounding box of the
/// collection, spacing `resolution` times the larger bounding-box side.
/// Planar collections only.
OracleResult fine_grid_pierce(std::span<const FatObject> objs, double resolution = 1e-3);

}  // namespace fatsep
