/* Microbenchmarks for the layers that dominate pipeline runtime: dense
 * series arithmetic, product construction, rank tables, and full family
 * assembly. Run the binary directly; these are not registered with ctest. */

#include <benchmark/benchmark.h>

#include "qrank/lambert.hpp"
#include "qrank/partitions.hpp"
#include "qrank/proofcheck.hpp"
#include "qrank/qproducts.hpp"
#include "qrank/series.hpp"

using namespace qrank;

static void BM_SeriesMul(benchmark::State& state) {
  const long order = state.range(0);
  LaurentSeries a = J(1, order);
  LaurentSeries b = J(2, order);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesMul)->Arg(100)->Arg(200)->Arg(400)->Complexity();

static void BM_SeriesInverse(benchmark::State& state) {
  const long order = state.range(0);
  LaurentSeries a = J(1, order);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
  state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesInverse)->Arg(100)->Arg(200)->Arg(400)->Complexity();

static void BM_BuildJ(benchmark::State& state) {
  const long order = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(J(1, order));
}
BENCHMARK(BM_BuildJ)->Arg(500)->Arg(1000);

static void BM_BuildLab(benchmark::State& state) {
  const long order = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(Lab(9, 20, order));
}
BENCHMARK(BM_BuildLab)->Arg(500)->Arg(1000);

static void BM_ProductExprEval(benchmark::State& state) {
  const long order = state.range(0);
  ProductExpr p;
  p.coeff = 2;
  p.mul_J(20, 15)
      .mul_Jab(6, 20)
      .mul_Jab(10, 20)
      .mul_Jab(1, 20, -2)
      .mul_Jab(2, 20, -1)
      .mul_Jab(3, 20, -3)
      .mul_Jab(5, 20, -2)
      .mul_Jab(7, 20, -3)
      .mul_Jab(8, 20, -2)
      .mul_Jab(9, 20, -2);
  for (auto _ : state) benchmark::DoNotOptimize(p.eval(order));
}
BENCHMARK(BM_ProductExprEval)->Arg(300)->Arg(1000);

static void BM_RankTableDP(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(rank_table_dp(10, n));
}
BENCHMARK(BM_RankTableDP)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_RankTableEnumM2(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(rank_table_enum(RankKind::M2, 10, n));
}
BENCHMARK(BM_RankTableEnumM2)->Arg(80)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_BilateralSeries(benchmark::State& state) {
  const long order = state.range(0);
  const BilateralSum s{Rat(15, 2), Rat(15, 2), 1, 5, 1};
  for (auto _ : state) benchmark::DoNotOptimize(bilateral_series(s, order));
}
BENCHMARK(BM_BilateralSeries)->Arg(200)->Arg(400);

static void BM_AssembleFamily(benchmark::State& state) {
  const long order = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(rhs_series("1.4", order));
}
BENCHMARK(BM_AssembleFamily)->Arg(200)->Arg(400);

static void BM_TheoremRhs(benchmark::State& state) {
  const long order = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(theorem_rhs(TargetId::T22a, order));
}
BENCHMARK(BM_TheoremRhs)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
