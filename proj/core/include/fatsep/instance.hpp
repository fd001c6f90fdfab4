#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fatsep/geometry.hpp"

namespace fatsep {

/// A collection of fat objects in R^d with dense ids 0..n-1.
struct Instance {
  int dim = 2;
  std::vector<FatObject> objects;
  std::string label;
  std::uint64_t seed = 0;

  std::size_t size() const { return objects.size(); }
  bool empty() const { return objects.empty(); }

  /// Throws fatsep::Error if ids are not dense, dimensions disagree, or an
  /// object is malformed.
  void validate(double max_aspect = kMaxObjectAspect) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Builds an instance from a list of objects, renumbering ids densely.
Instance make_instance(int dim, std::vector<FatObject> objects, std::string label = {});

/// Sub-collection by id, keeping the original ids.
std::vector<FatObject> select(const Instance& inst, const std::vector<int>& ids);

}  // namespace fatsep
