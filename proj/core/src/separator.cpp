#include "fatsep/separator.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <unordered_set>

#include "fatsep/error.hpp"
#include "measure_impl.hpp"
#include "separator_impl.hpp"

namespace fatsep {

void SeparatorConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) throw Error("separator epsilon must lie in (0, 1/2]");
  if (!(balance_cap >= 0.0 && balance_cap <= 1.0)) throw Error("balance_cap must lie in [0, 1]");
  if (shell_samples_cap < 1) throw Error("shell_samples_cap must be positive");
  if (!(side_search_ratio > 1.0)) throw Error("side_search_ratio must exceed 1");
}

bool SeparatorResult::balanced(double cap) const {
  return mu_inside.value <= cap * mu_total.value && mu_outside.value <= cap * mu_total.value;
}

double guaranteed_separation_threshold(int dim, double epsilon, double fatness_constant) {
  const double d = dim;
  return std::pow(3.0 * fatness_constant * d * d * std::pow(8.0, d) / epsilon, d);
}

namespace detail {

namespace {

using Fingerprint = std::pair<std::uint64_t, std::uint64_t>;

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const {
    return static_cast<std::size_t>(f.first ^ (f.second * 0x9E3779B97F4A7C15ull));
  }
};

// State shared by all anchor scans of one base-box search.
struct ScanContext {
  ScanContext(const Problem& problem, const std::vector<std::size_t>& alive, std::size_t tau);

  /// greedy_pack_reaches restricted to `window`.
  bool reaches(const std::vector<std::size_t>& window);

  const Problem& problem;
  std::size_t tau;
  std::vector<std::vector<std::size_t>> order;  // alive positions by coordinate, per axis
  std::vector<std::vector<std::size_t>> rank;   // inverse of `order`
  // Greedy clique partition: a window touching fewer than tau cliques holds
  // fewer than tau disjoint objects, and so does every sub-window.
  std::vector<std::size_t> clique;
  // Centre sets known to fall short, keyed by an order-independent
  // fingerprint (xor and sum of per-object random keys).
  std::vector<Fingerprint> keys;
  std::unordered_set<Fingerprint, FingerprintHash> failed;
  std::vector<std::uint64_t> stamp;
  std::uint64_t epoch = 0;
  Bits members;
  Bits blocked;
};

ScanContext::ScanContext(const Problem& p, const std::vector<std::size_t>& alive, std::size_t t)
    : problem(p),
      tau(t),
      order(p.dim(), alive),
      rank(p.dim(), std::vector<std::size_t>(p.size(), 0)),
      clique(p.size(), 0),
      keys(p.size()),
      stamp(p.size(), 0),
      members(p.none()),
      blocked(p.none()) {
  for (std::size_t axis = 0; axis < p.dim(); ++axis) {
    std::stable_sort(order[axis].begin(), order[axis].end(), [&](std::size_t a, std::size_t b) {
      return p.object_center(a)[axis] < p.object_center(b)[axis];
    });
    for (std::size_t r = 0; r < order[axis].size(); ++r) rank[axis][order[axis][r]] = r;
  }

  Bits open = p.from_positions(alive);
  std::size_t label = 0;
  for (auto v : p.size_order()) {
    if (!open.test(v)) continue;
    Bits common = p.closed_neighborhood(v) & open;
    for (auto u : p.size_order()) {
      if (!common.test(u)) continue;
      common &= p.closed_neighborhood(u);
      clique[u] = label;
      open.reset(u);
    }
    ++label;
  }

  std::uint64_t state = 0x243F6A8885A308D3ull;
  const auto splitmix = [&state] {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  for (auto& k : keys) k = {splitmix(), splitmix()};
}

bool ScanContext::reaches(const std::vector<std::size_t>& window) {
  members.reset();
  for (auto i : window) members.set(i);
  blocked.reset();
  std::size_t count = 0, left = window.size();
  for (auto i : problem.size_order()) {
    if (!members.test(i)) continue;
    if (count + left < tau) return false;
    --left;
    if (blocked.test(i)) continue;
    if (++count >= tau) return true;
    blocked |= problem.closed_neighborhood(i);
  }
  return false;
}

// Finds the first box (lexicographic in anchor order) of the given side
// lengths whose low corner sits on centre coordinates and whose centred
// objects reach a greedy packing of tau; with `greedy` off, the first box
// touching tau cliques.
class AnchorScan {
 public:
  AnchorScan(ScanContext& ctx, std::vector<double> sides, bool greedy)
      : ctx_(ctx),
        sides_(std::move(sides)),
        greedy_(greedy),
        low_(sides_.size()),
        counts_(sides_.size(), std::vector<std::uint32_t>(ctx.problem.size(), 0)) {}

  std::optional<BoxRegion> run() { return scan(0, ctx_.order[0]); }

 private:
  double coord(std::size_t obj, std::size_t axis) const { return ctx_.problem.object_center(obj)[axis]; }

  BoxRegion current() const {
    std::vector<double> high(sides_.size());
    for (std::size_t k = 0; k < high.size(); ++k) high[k] = low_[k] + sides_[k];
    return BoxRegion(Point(low_), Point(std::move(high)));
  }

  // `alive` sorted along `axis`; both window ends only move forward.
  std::optional<BoxRegion> scan(std::size_t axis, const std::vector<std::size_t>& alive) {
    const bool last = axis + 1 == sides_.size();
    const auto& clique = ctx_.clique;
    auto& count = counts_[axis];
    std::size_t distinct = 0;
    Fingerprint print{0, 0};
    const std::size_t m = alive.size();
    std::size_t lo = 0, j = 0;
    const auto drop_window = [&] {
      for (std::size_t k = lo; k < j; ++k) --count[clique[alive[k]]];
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (; lo < i; ++lo) {
        const auto o = alive[lo];
        if (--count[clique[o]] == 0) --distinct;
        print.first ^= ctx_.keys[o].first;
        print.second -= ctx_.keys[o].second;
      }
      const double a = coord(alive[i], axis);
      if (i > 0 && a == coord(alive[i - 1], axis)) continue;
      const double hi = a + sides_[axis];
      for (; j < m && coord(alive[j], axis) <= hi; ++j) {
        const auto o = alive[j];
        if (count[clique[o]]++ == 0) ++distinct;
        print.first ^= ctx_.keys[o].first;
        print.second += ctx_.keys[o].second;
      }
      if (j - i < ctx_.tau || distinct < ctx_.tau) continue;
      low_[axis] = a;
      std::optional<BoxRegion> found;
      if (last) {
        if (!greedy_) {
          found = current();
        } else if (!ctx_.failed.count(print)) {
          const std::vector<std::size_t> window(alive.begin() + static_cast<std::ptrdiff_t>(i),
                                                alive.begin() + static_cast<std::ptrdiff_t>(j));
          if (ctx_.reaches(window)) {
            found = current();
          } else {
            ctx_.failed.insert(print);
          }
        }
      } else {
        found = scan(axis + 1, next_axis(alive, i, j, axis + 1));
      }
      if (found) {
        drop_window();
        return found;
      }
    }
    drop_window();
    return std::nullopt;
  }

  // alive[i, j) sorted along `axis`: by sorting small windows, by filtering
  // the global order otherwise.
  std::vector<std::size_t> next_axis(const std::vector<std::size_t>& alive, std::size_t i, std::size_t j,
                                     std::size_t axis) const {
    std::vector<std::size_t> out;
    out.reserve(j - i);
    const auto& global = ctx_.order[axis];
    if ((j - i) * 16 < global.size()) {
      out.assign(alive.begin() + static_cast<std::ptrdiff_t>(i), alive.begin() + static_cast<std::ptrdiff_t>(j));
      const auto& r = ctx_.rank[axis];
      std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return r[a] < r[b]; });
      return out;
    }
    const auto epoch = ++ctx_.epoch;
    for (std::size_t k = i; k < j; ++k) ctx_.stamp[alive[k]] = epoch;
    for (auto p : global) {
      if (ctx_.stamp[p] == epoch) out.push_back(p);
    }
    return out;
  }

  ScanContext& ctx_;
  std::vector<double> sides_;
  bool greedy_;
  std::vector<double> low_;
  std::vector<std::vector<std::uint32_t>> counts_;
};

BoxRegion point_cube(const Point& p, double side) {
  std::vector<double> lo(p.dim()), hi(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    lo[i] = p[i] - 0.5 * side;
    hi[i] = p[i] + 0.5 * side;
  }
  return BoxRegion(Point(std::move(lo)), Point(std::move(hi)));
}

double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

bool Separation::balanced(double cap) const {
  const double total = static_cast<double>(mu_total.size());
  return static_cast<double>(mu_inside.size()) <= cap * total && static_cast<double>(mu_outside.size()) <= cap * total;
}

int shell_count(std::size_t dim, int g, int cap) {
  const double root = std::pow(static_cast<double>(std::max(g, 1)), 1.0 / static_cast<double>(dim));
  const double top = (std::pow(2.0, 1.0 / static_cast<double>(dim)) - 1.0) * root;
  const int last = static_cast<int>(std::floor(top + 1e-12));
  return std::clamp(last + 1, 1, std::max(cap, 1));
}

BoxRegion find_base_box(const Problem& problem, const Bits& subset, int tau, const SeparatorConfig& cfg,
                        bool* degenerate) {
  cfg.validate();
  const auto alive = problem.positions(subset);
  if (alive.empty()) throw Error("find_base_box needs at least one object");
  const std::size_t target = static_cast<std::size_t>(std::max(tau, 1));
  if (!greedy_pack_reaches(problem, subset, target)) {
    throw Error("tau = " + std::to_string(tau) + " exceeds the greedy measure of the collection");
  }
  if (degenerate) *degenerate = false;

  double max_dist = 0.0;
  double min_dist = 0.0;
  for (std::size_t a = 0; a < alive.size(); ++a) {
    for (std::size_t b = a + 1; b < alive.size(); ++b) {
      const double dist = distance(problem.object_center(alive[a]), problem.object_center(alive[b]));
      max_dist = std::max(max_dist, dist);
      if (dist > 0.0 && (min_dist == 0.0 || dist < min_dist)) min_dist = dist;
    }
  }
  if (max_dist == 0.0) {
    double smallest = problem.object_size(alive.front());
    for (auto i : alive) smallest = std::min(smallest, problem.object_size(i));
    if (degenerate) *degenerate = true;
    return point_cube(problem.object_center(alive.front()), 1e-6 * smallest);
  }

  std::vector<double> ladder;
  for (double side = min_dist; side < max_dist; side *= cfg.side_search_ratio) ladder.push_back(side);
  ladder.push_back(max_dist);

  const std::size_t d = problem.dim();
  struct Shape {
    std::vector<double> factors;
    double volume_factor;
  };
  std::vector<Shape> shapes;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << d); ++mask) {
    Shape s{std::vector<double>(d, 1.0), 1.0};
    for (std::size_t i = 0; i < d; ++i) {
      if (mask & (std::size_t{1} << i)) {
        s.factors[i] = 2.0;
        s.volume_factor *= 2.0;
      }
    }
    shapes.push_back(std::move(s));
  }
  const auto sides_of = [&](const Shape& s, double base) {
    std::vector<double> sides(d);
    for (std::size_t i = 0; i < d; ++i) sides[i] = base * s.factors[i];
    return sides;
  };

  ScanContext ctx(problem, alive, target);

  struct Candidate {
    double volume;
    std::size_t shape;
    std::size_t rung;
  };
  std::vector<Candidate> candidates;
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    // touching `target` cliques is monotone in the rung
    std::size_t lo = 0, hi = ladder.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (AnchorScan(ctx, sides_of(shapes[s], ladder[mid]), false).run()) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    for (std::size_t r = lo; r < ladder.size(); ++r) {
      candidates.push_back({std::pow(ladder[r], static_cast<double>(d)) * shapes[s].volume_factor, s, r});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.volume != b.volume) return a.volume < b.volume;
    if (a.shape != b.shape) return a.shape < b.shape;
    return a.rung < b.rung;
  });
  for (const auto& c : candidates) {
    if (auto box = AnchorScan(ctx, sides_of(shapes[c.shape], ladder[c.rung]), true).run()) {
      return *box;
    }
  }
  throw Error("find_base_box: no candidate reaches tau");  // unreachable: the top rung holds every centre
}

Sweep shell_sweep(const Problem& problem, const Bits& subset, const BoxRegion& base, int g,
                  const SeparatorConfig& cfg) {
  cfg.validate();
  const std::size_t d = base.dim();
  const double root = std::pow(static_cast<double>(std::max(g, 1)), 1.0 / static_cast<double>(d));
  const int count = shell_count(d, g, cfg.shell_samples_cap);
  Sweep sweep;
  sweep.size_threshold = base.longest_side() / (8.0 * root);
  const auto members = problem.positions(subset);
  for (int j = 0; j < count; ++j) {
    Shell shell;
    shell.index = j;
    shell.magnification = 1.0 + j / root;
    const BoxRegion box = j == 0 ? base : magnify(base, shell.magnification);
    shell.boundary = problem.none();
    shell.small_boundary = problem.none();
    for (auto i : members) {
      if (classify(problem.object(i), box) != RegionClass::Boundary) continue;
      shell.boundary.set(i);
      if (problem.object_size(i) < sweep.size_threshold) shell.small_boundary.set(i);
    }
    shell.measure = static_cast<int>(greedy_pack(problem, shell.boundary).size());
    shell.small_measure = static_cast<int>(greedy_pack(problem, shell.small_boundary).size());
    if (!sweep.shells.empty() && shell.measure < sweep.shells[sweep.best].measure) {
      sweep.best = sweep.shells.size();
    }
    sweep.shells.push_back(std::move(shell));
  }
  return sweep;
}

Separation separate(const Problem& problem, const Bits& subset, const SeparatorConfig& cfg) {
  cfg.validate();
  if (subset.count() < 2) throw Error("separate needs at least two objects");
  auto total = greedy_pack(problem, subset);
  const int g = static_cast<int>(total.size());
  const int tau = std::clamp(static_cast<int>(std::ceil((1.0 + cfg.epsilon) / 3.0 * g - 1e-12)), 1, g);

  bool degenerate = false;
  BoxRegion base = find_base_box(problem, subset, tau, cfg, &degenerate);
  Sweep sweep = shell_sweep(problem, subset, base, g, cfg);
  const Shell& chosen = sweep.shells[sweep.best];
  BoxRegion box = chosen.index == 0 ? base : magnify(base, chosen.magnification);

  Separation sep{box, base, chosen.magnification, problem.none(), problem.none(), problem.none(), {}, {}, {}, {},
                 degenerate};
  for (auto i = subset.find_first(); i != Bits::npos; i = subset.find_next(i)) {
    switch (classify(problem.object(i), box)) {
      case RegionClass::Inside:
        sep.inside.set(i);
        break;
      case RegionClass::Outside:
        sep.outside.set(i);
        break;
      case RegionClass::Boundary:
        sep.boundary.set(i);
        break;
    }
  }
  sep.mu_total = std::move(total);
  sep.mu_inside = greedy_pack(problem, sep.inside);
  sep.mu_outside = greedy_pack(problem, sep.outside);
  sep.mu_boundary = greedy_pack(problem, sep.boundary);
  return sep;
}

}  // namespace detail

namespace {

MeasureEstimate estimate(const detail::Problem& problem, const std::vector<std::size_t>& members) {
  MeasureEstimate est;
  est.ids = problem.ids(members);
  est.value = static_cast<int>(est.ids.size());
  return est;
}

}  // namespace

BoxRegion find_base_box(std::span<const FatObject> objs, int tau, const SeparatorConfig& cfg) {
  const detail::Problem problem(objs);
  return detail::find_base_box(problem, problem.all(), tau, cfg);
}

ShellSweepResult shell_sweep(std::span<const FatObject> objs, const BoxRegion& base, int g,
                             const SeparatorConfig& cfg) {
  const detail::Problem problem(objs);
  const auto sweep = detail::shell_sweep(problem, problem.all(), base, g, cfg);
  ShellSweepResult out;
  out.size_threshold = sweep.size_threshold;
  out.best_index = static_cast<int>(sweep.best);
  for (const auto& s : sweep.shells) {
    out.shells.push_back({s.index, s.magnification, problem.ids(s.boundary), problem.ids(s.small_boundary),
                          s.measure, s.small_measure});
  }
  out.m_star = sweep.shells[sweep.best].magnification;
  out.boundary_measure = sweep.shells[sweep.best].measure;
  return out;
}

SeparatorResult separate(std::span<const FatObject> objs, const SeparatorConfig& cfg) {
  const detail::Problem problem(objs);
  const auto sep = detail::separate(problem, problem.all(), cfg);
  return SeparatorResult{sep.box,
                         sep.base_box,
                         sep.m_star,
                         problem.ids(sep.inside),
                         problem.ids(sep.outside),
                         problem.ids(sep.boundary),
                         estimate(problem, sep.mu_total),
                         estimate(problem, sep.mu_inside),
                         estimate(problem, sep.mu_outside),
                         estimate(problem, sep.mu_boundary),
                         sep.degenerate};
}

}  // namespace fatsep
