#pragma once

#include <cstdint>
#include <string>

#include "fatsep/instance.hpp"

namespace fatsep {

enum class Family { Random, Clusters, Grid };
enum class ShapeKind { Ball, Box, Mixed };

const char* to_string(Family f);
const char* to_string(ShapeKind s);
Family parse_family(const std::string& s);
ShapeKind parse_shape(const std::string& s);

struct GenSpec {
  Family family = Family::Random;
  ShapeKind shape = ShapeKind::Ball;
  int dim = 2;
  /// Number of objects (random and cluster families).
  int n = 0;
  std::uint64_t seed = 1;
  /// Random family: expected object count per unit volume.
  double density = 0.8;
  /// Object sizes are uniform in [min_size, max_size] (random, clusters).
  double min_size = 0.5;
  double max_size = 1.0;
  /// Clusters family: number of clusters, placed 10 apart on the x axis.
  int clusters = 2;
  /// Grid family: k^d sites `spacing` apart, `per_site` mutually
  /// intersecting objects of size about 1 at each site, so Pack = k^d.
  int k = 3;
  int per_site = 1;
  /// Above 1.2, objects at different sites never meet.
  double spacing = 10.0;

  void validate() const;
};

/// Deterministic in the spec.
Instance gen_instance(const GenSpec& spec);

}  // namespace fatsep
