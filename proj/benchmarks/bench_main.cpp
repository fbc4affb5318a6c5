#include <benchmark/benchmark.h>

#include <random>

#include "ashom/corpus.hpp"
#include "ashom/normal_homology.hpp"
#include "ashom/towers.hpp"

using namespace ashom;

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntegerMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_diagonal(A));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_ConeHomologyTorus(benchmark::State& state) {
  IntegerCochainComplex C = torus_complex();
  FGAbelianGroup G(1, {Integer(2)});
  for (auto _ : state) benchmark::DoNotOptimize(homology(C, G, 1).group);
}
BENCHMARK(BM_ConeHomologyTorus);

void BM_UcfCheckRp2(benchmark::State& state) {
  IntegerCochainComplex C = rp2_complex();
  for (auto _ : state) benchmark::DoNotOptimize(ucf_check(C, FGAbelianGroup::cyclic(6), 1).pass());
}
BENCHMARK(BM_UcfCheckRp2);

void BM_DowkerSweep(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dowker_sweep(points, 3, 2).failures);
}
BENCHMARK(BM_DowkerSweep)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TowerLim(benchmark::State& state) {
  Tower T = Tower::periodic(FGAbelianGroup(2, {Integer(4), Integer(12)}),
                            IntegerMatrix{{2, 1, 0, 0}, {1, 1, 0, 0}, {1, 0, 2, 0}, {0, 3, 3, 5}});
  for (auto _ : state) benchmark::DoNotOptimize(lim_report(T).lim);
}
BENCHMARK(BM_TowerLim);

}  // namespace
BENCHMARK_MAIN();
