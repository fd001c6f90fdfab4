#include <benchmark/benchmark.h>

#include "fatsep/exact_solver.hpp"
#include "fatsep/generate.hpp"
#include "fatsep/measure.hpp"
#include "fatsep/ptas.hpp"
#include "fatsep/separator.hpp"

namespace {

fatsep::Instance grid(int k, int per_site) {
  fatsep::GenSpec g;
  g.family = fatsep::Family::Grid;
  g.shape = fatsep::ShapeKind::Ball;
  g.k = k;
  g.per_site = per_site;
  return fatsep::gen_instance(g);
}

fatsep::Instance random(int n, fatsep::ShapeKind shape) {
  fatsep::GenSpec g;
  g.family = fatsep::Family::Random;
  g.shape = shape;
  g.n = n;
  g.seed = 7;
  return fatsep::gen_instance(g);
}

void BM_GreedyPack(benchmark::State& state) {
  const auto inst = random(static_cast<int>(state.range(0)), fatsep::ShapeKind::Mixed);
  for (auto _ : state) benchmark::DoNotOptimize(fatsep::greedy_pack(inst.objects).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyPack)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Separate(benchmark::State& state) {
  const auto inst = random(static_cast<int>(state.range(0)), fatsep::ShapeKind::Ball);
  for (auto _ : state) benchmark::DoNotOptimize(fatsep::separate(inst.objects).boundary_ids.size());
}
BENCHMARK(BM_Separate)->RangeMultiplier(4)->Range(64, 1024);

void BM_SolvePackGrid(benchmark::State& state) {
  const auto inst = grid(static_cast<int>(state.range(0)), 4);
  fatsep::SolveConfig cfg;
  cfg.clique_bound = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(fatsep::solve_pack(inst, cfg).value);
}
BENCHMARK(BM_SolvePackGrid)->ArgsProduct({{2, 3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_PtasPack(benchmark::State& state) {
  const auto inst = random(static_cast<int>(state.range(0)), fatsep::ShapeKind::Ball);
  fatsep::PtasConfig cfg;
  cfg.epsilon = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(fatsep::ptas_pack(inst, cfg).solution.value);
}
BENCHMARK(BM_PtasPack)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
