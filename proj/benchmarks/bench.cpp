#include <benchmark/benchmark.h>

#include "mgcolor/density.hpp"
#include "mgcolor/factorization.hpp"
#include "mgcolor/generators.hpp"
#include "mgcolor/oracle.hpp"
#include "mgcolor/pipeline.hpp"

namespace {

using namespace mgcolor;

void BM_DensityExact(benchmark::State& state) {
  const Multigraph g = gen_min_degree_multigraph({static_cast<int>(state.range(0)), 2, Regime::kMinDegree,
                                                  static_cast<int>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(density_exact(g));
}
BENCHMARK(BM_DensityExact)->Arg(8)->Arg(10)->Arg(12)->Arg(14);

void BM_DensityFastpath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Multigraph g = gen_deficient_dense_multigraph({n, 2, Regime::kMinDegree, 3 * n / 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(density_fastpath(g));
}
BENCHMARK(BM_DensityFastpath)->Arg(20)->Arg(40)->Arg(80);

void BM_OneFactorizeRegular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Multigraph g = folded_complete(n, 3);
  FactorOptions opts;
  opts.desk_scale = true;
  for (auto _ : state) benchmark::DoNotOptimize(one_factorize_regular(g, opts));
}
BENCHMARK(BM_OneFactorizeRegular)->Arg(10)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_OracleQStar(benchmark::State& state) {
  const Multigraph g = q_star(static_cast<int>(state.range(0)));
  OracleOptions opts;
  opts.edge_cap = 60;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_chi(g, opts));
}
BENCHMARK(BM_OracleQStar)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DenseNoOverfull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Multigraph g = gen_deficient_dense_multigraph(
      {n, 3, Regime::kMinDegree, static_cast<int>(state.range(1)), 8});
  PipelineConfig cfg;
  cfg.desk_scale = true;
  for (auto _ : state) benchmark::DoNotOptimize(color_dense_no_overfull(g, cfg));
}
BENCHMARK(BM_DenseNoOverfull)->Args({18, 41})->Args({24, 56})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
