#include "fatsep/ptas.hpp"

#include <algorithm>
#include <cmath>

#include "fatsep/error.hpp"
#include "measure_impl.hpp"
#include "solver_impl.hpp"

namespace fatsep {

int PtasConfig::stop_threshold(int dim) const {
  return std::max(1, static_cast<int>(std::ceil(std::pow(c_stop / epsilon, dim) - 1e-9)));
}

void PtasConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error("PTAS epsilon must lie in (0, 1)");
  if (!(c_stop > 0.0)) throw Error("c_stop must be positive");
  exact.validate();
}

namespace {

using Clock = std::chrono::steady_clock;
using detail::Bits;

// Shared driver; `Recursion` is the exact solver used at the leaves and
// `estimate` the greedy measure that decides when to stop splitting.
template <typename Recursion, typename Estimate, typename Boundary>
struct PtasDriver {
  const detail::Problem& problem;
  const PtasConfig& cfg;
  const Recursion& exact;
  int stop;
  Estimate estimate;
  Boundary handle_boundary;  // returns members for the boundary and the objects they settle
  std::vector<LevelLoss> losses;

  detail::Outcome run(const Bits& subset, int depth) {
    detail::Outcome out;
    out.tally.depth = depth + 1;
    if (subset.none()) return out;
    const auto size = estimate(subset);
    if (static_cast<int>(size) <= stop || subset.count() < 2) return leaf(subset, depth);
    const auto sep = detail::separate(problem, subset, cfg.exact.separator);
    out.tally.separations = 1;
    if (!detail::usable(sep, subset, cfg.exact.separator.balance_cap)) return leaf(subset, depth);

    losses.push_back({depth, static_cast<int>(sep.boundary.count()), static_cast<int>(sep.mu_boundary.size()),
                      static_cast<int>(sep.mu_total.size())});
    auto [members, settled] = handle_boundary(sep.boundary, subset);
    out.members = std::move(members);
    for (const Bits* side : {&sep.inside, &sep.outside}) {
      auto part = run(*side - settled, depth + 1);
      out.tally.absorb(part.tally);
      out.members.insert(out.members.end(), part.members.begin(), part.members.end());
    }
    return out;
  }

  detail::Outcome leaf(const Bits& subset, int depth) {
    auto out = exact.solve(subset, 0);
    out.tally.depth = depth + 1;
    return out;
  }
};

template <typename Recursion, typename Estimate, typename Boundary>
PtasDriver<Recursion, Estimate, Boundary> make_driver(const detail::Problem& problem, const PtasConfig& cfg,
                                                      const Recursion& exact, int stop, Estimate estimate,
                                                      Boundary boundary) {
  return {problem, cfg, exact, stop, std::move(estimate), std::move(boundary), {}};
}

SearchStats stats_of(const detail::Tally& tally, const detail::NodeBudget& budget, Clock::time_point start) {
  SearchStats stats;
  stats.nodes = tally.nodes;
  stats.depth = tally.depth;
  stats.separations = tally.separations;
  stats.fallbacks = tally.fallbacks;
  stats.optimal = !budget.exhausted();
  stats.wall_time = Clock::now() - start;
  return stats;
}

}  // namespace

PtasPackResult ptas_pack(const Instance& inst, const PtasConfig& cfg) {
  cfg.validate();
  inst.validate();
  const auto start = Clock::now();
  const detail::Problem problem(inst.objects);
  detail::NodeBudget budget(cfg.exact.node_cap);
  const detail::PackRecursion exact(problem, cfg.exact, budget);

  auto driver = make_driver(
      problem, cfg, exact, cfg.stop_threshold(inst.dim),
      [&](const Bits& s) { return detail::greedy_pack(problem, s).size(); },
      [&](const Bits&, const Bits&) { return std::pair{std::vector<std::size_t>{}, problem.none()}; });
  const auto outcome = driver.run(problem.all(), 0);

  PtasPackResult result;
  result.solution.witness = problem.ids(outcome.members);
  result.solution.value = static_cast<int>(result.solution.witness.size());
  result.solution.stats = stats_of(outcome.tally, budget, start);
  result.losses = std::move(driver.losses);
  return result;
}

PtasPierceResult ptas_pierce(const Instance& inst, const PtasConfig& cfg) {
  cfg.validate();
  inst.validate();
  const auto start = Clock::now();
  const detail::Problem problem(inst.objects);
  problem.candidates();
  detail::NodeBudget budget(cfg.exact.node_cap);
  const detail::PierceRecursion exact(problem, cfg.exact, budget);

  auto driver = make_driver(
      problem, cfg, exact, cfg.stop_threshold(inst.dim),
      [&](const Bits& s) { return detail::greedy_pierce(problem, s).size(); },
      [&](const Bits& boundary, const Bits& subset) {
        auto points = detail::greedy_pierce(problem, boundary);
        Bits settled = detail::covered(problem, subset, points);
        return std::pair{std::move(points), std::move(settled)};
      });
  const auto outcome = driver.run(problem.all(), 0);

  PtasPierceResult result;
  std::vector<std::size_t> indices = outcome.members;
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (auto c : indices) result.solution.witness.push_back(problem.candidates().points[c]);
  result.solution.value = static_cast<int>(result.solution.witness.size());
  result.solution.stats = stats_of(outcome.tally, budget, start);
  result.losses = std::move(driver.losses);
  return result;
}

}  // namespace fatsep
