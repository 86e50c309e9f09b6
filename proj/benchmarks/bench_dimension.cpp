#include <benchmark/benchmark.h>

#include <algorithm>

#include "posetdim/dimension.hpp"
#include "posetdim/enumerate.hpp"
#include "posetdim/fractional.hpp"
#include "posetdim/generators.hpp"

namespace {

using namespace posetdim;

void BM_DimStandardExample(benchmark::State& state) {
  const auto p = gen_standard_example(static_cast<int>(state.range(0))).poset();
  for (auto _ : state) benchmark::DoNotOptimize(dim_exact(p).value);
}
BENCHMARK(BM_DimStandardExample)->DenseRange(3, 7);

void BM_DimFano(benchmark::State& state) {
  const auto p = gen_projective_plane(2).poset.poset();
  for (auto _ : state) benchmark::DoNotOptimize(dim_exact(p).value);
}
BENCHMARK(BM_DimFano);

void BM_MaxStandardExample(benchmark::State& state) {
  const auto p = gen_projective_plane(static_cast<int>(state.range(0))).poset.poset();
  for (auto _ : state) benchmark::DoNotOptimize(max_standard_example(p).d);
}
BENCHMARK(BM_MaxStandardExample)->Arg(2)->Arg(3);

void BM_DimAllSevenElementPosets(benchmark::State& state) {
  const auto posets = enumerate_posets(7);
  for (auto _ : state) {
    int worst = 0;
    for (const auto& p : posets) worst = std::max(worst, dim_exact(p).value);
    benchmark::DoNotOptimize(worst);
  }
}
BENCHMARK(BM_DimAllSevenElementPosets)->Unit(benchmark::kMillisecond);

void BM_LinearExtensions(benchmark::State& state) {
  const auto p = gen_antichain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_linear_extension(p, kDefaultExtensionCap, [&](const LinearExtension&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_LinearExtensions)->DenseRange(5, 8);

void BM_FdimStandardExample(benchmark::State& state) {
  const auto p = gen_standard_example(static_cast<int>(state.range(0))).poset();
  for (auto _ : state) benchmark::DoNotOptimize(fdim_exact(p).value);
}
BENCHMARK(BM_FdimStandardExample)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_WeightedFamily(benchmark::State& state) {
  const auto bp = gen_random_bipartite(static_cast<int>(state.range(0)), 0.4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_family_bipartite(bp).report.s);
}
BENCHMARK(BM_WeightedFamily)->DenseRange(3, 6);

}  // namespace
BENCHMARK_MAIN();
