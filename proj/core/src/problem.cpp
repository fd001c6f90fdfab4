#include "problem.hpp"

#include <algorithm>
#include <numeric>

#include "fatsep/error.hpp"

namespace fatsep::detail {

Problem::Problem(std::span<const FatObject> objects) : objects_(objects.begin(), objects.end()) {
  const std::size_t n = objects_.size();
  dim_ = n ? objects_.front().dim() : 0;
  sizes_.reserve(n);
  centers_.reserve(n);
  for (const auto& obj : objects_) {
    if (obj.dim() != dim_) throw Error("mixed dimensions in collection");
    sizes_.push_back(fatsep::size(obj));
    centers_.push_back(fatsep::center(obj));
  }
  adjacency_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    adjacency_[i].set(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (intersects(objects_[i], objects_[j])) {
        adjacency_[i].set(j);
        adjacency_[j].set(i);
      }
    }
  }
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    if (sizes_[a] != sizes_[b]) return sizes_[a] < sizes_[b];
    return objects_[a].id < objects_[b].id;
  });
}

std::size_t Problem::degree_in(std::size_t i, const Bits& subset) const {
  return (adjacency_[i] & subset).count() - (subset.test(i) ? 1 : 0);
}

Bits Problem::all() const {
  Bits b(size());
  b.set();
  return b;
}

Bits Problem::from_positions(std::span<const std::size_t> positions) const {
  Bits b(size());
  for (auto p : positions) b.set(p);
  return b;
}

std::vector<std::size_t> Problem::positions(const Bits& subset) const {
  std::vector<std::size_t> out;
  out.reserve(subset.count());
  for (auto i = subset.find_first(); i != Bits::npos; i = subset.find_next(i)) out.push_back(i);
  return out;
}

std::vector<int> Problem::ids(const Bits& subset) const {
  std::vector<int> out;
  for (auto i = subset.find_first(); i != Bits::npos; i = subset.find_next(i)) out.push_back(objects_[i].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Problem::ids(std::span<const std::size_t> positions) const {
  std::vector<int> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(objects_[p].id);
  std::sort(out.begin(), out.end());
  return out;
}

Bits Problem::neighborhood(const Bits& members) const {
  Bits out(size());
  for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i)) out |= adjacency_[i];
  return out;
}

std::vector<Bits> Problem::components(const Bits& subset) const {
  std::vector<Bits> out;
  Bits left = subset;
  while (left.any()) {
    Bits comp(size());
    Bits frontier(size());
    frontier.set(left.find_first());
    while (frontier.any()) {
      comp |= frontier;
      Bits next(size());
      for (auto i = frontier.find_first(); i != Bits::npos; i = frontier.find_next(i)) next |= adjacency_[i];
      next &= subset;
      next -= comp;
      frontier = std::move(next);
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

const CandidateSet& Problem::candidates() const {
  std::call_once(candidates_once_, [this] { candidates_ = std::make_unique<CandidateSet>(build_candidate_set(*this)); });
  return *candidates_;
}

std::vector<std::size_t> relevant_candidates(const Problem& problem, const Bits& subset, std::size_t obj) {
  const auto& cs = problem.candidates();
  struct Entry {
    std::size_t index;
    Bits mask;
    std::size_t count;
  };
  std::vector<Entry> entries;
  for (auto c : cs.by_object[obj]) {
    Bits mask = cs.coverage[c] & subset;
    const std::size_t count = mask.count();
    entries.push_back({c, std::move(mask), count});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.count > b.count; });
  std::vector<std::size_t> kept;
  std::vector<const Bits*> kept_masks;
  for (const auto& e : entries) {
    const bool dominated = std::any_of(kept_masks.begin(), kept_masks.end(),
                                       [&](const Bits* m) { return e.mask.is_subset_of(*m); });
    if (dominated) continue;
    kept.push_back(e.index);
    kept_masks.push_back(&e.mask);
  }
  return kept;
}

}  // namespace fatsep::detail
