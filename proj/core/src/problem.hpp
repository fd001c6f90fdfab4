#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fatsep/geometry.hpp"

namespace fatsep::detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct CandidateSet {
  std::vector<Point> points;
  std::vector<Bits> coverage;                      // objects containing each point
  std::vector<std::vector<std::size_t>> by_object;  // candidates inside each object
};

/// Immutable view of a collection with its intersection graph. Objects are
/// addressed by position 0..n-1; original ids are kept for reporting.
class Problem {
 public:
  explicit Problem(std::span<const FatObject> objects);
  Problem(const Problem&) = delete;
  Problem& operator=(const Problem&) = delete;

  std::size_t size() const { return objects_.size(); }
  std::size_t dim() const { return dim_; }
  const FatObject& object(std::size_t i) const { return objects_[i]; }
  int id(std::size_t i) const { return objects_[i].id; }
  double object_size(std::size_t i) const { return sizes_[i]; }
  const Point& object_center(std::size_t i) const { return centers_[i]; }

  /// Objects intersecting i, including i itself.
  const Bits& closed_neighborhood(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree_in(std::size_t i, const Bits& subset) const;

  /// Positions sorted by (size, id).
  const std::vector<std::size_t>& size_order() const { return order_; }

  Bits none() const { return Bits(size()); }
  Bits all() const;
  Bits from_positions(std::span<const std::size_t> positions) const;
  std::vector<std::size_t> positions(const Bits& subset) const;
  std::vector<int> ids(const Bits& subset) const;
  std::vector<int> ids(std::span<const std::size_t> positions) const;

  /// Union of closed neighbourhoods of the members.
  Bits neighborhood(const Bits& members) const;
  std::vector<Bits> components(const Bits& subset) const;

  /// Dominance-pruned candidate piercing points; built on first use.
  /// Throws if the collection is not supported for piercing.
  const CandidateSet& candidates() const;

 private:
  std::vector<FatObject> objects_;
  std::size_t dim_ = 0;
  std::vector<double> sizes_;
  std::vector<Point> centers_;
  std::vector<Bits> adjacency_;
  std::vector<std::size_t> order_;
  mutable std::once_flag candidates_once_;
  mutable std::unique_ptr<CandidateSet> candidates_;
};

/// Candidate points containing `obj`, restricted to `subset`, with duplicate
/// and dominated coverage removed. Sorted by coverage size, then index.
std::vector<std::size_t> relevant_candidates(const Problem& problem, const Bits& subset, std::size_t obj);

CandidateSet build_candidate_set(const Problem& problem);

}  // namespace fatsep::detail
