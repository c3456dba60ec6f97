#include "hexafern/count.hpp"
#include "hexafern/formulas.hpp"
#include "hexafern/lgv.hpp"
#include "hexafern/regions.hpp"

#include <benchmark/benchmark.h>

using namespace hexafern;

static void BM_SearchHalvedHexagon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto r = build_P(n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r).value);
  state.counters["cells"] = static_cast<double>(r.size());
}
BENCHMARK(BM_SearchHalvedHexagon)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_SearchPlainHalvedHexagon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto r = build_P(n, n, n);
  CountOptions o;
  o.memoize = false;
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r, o).value);
}
BENCHMARK(BM_SearchPlainHalvedHexagon)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_DualHalvedHexagon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto r = build_P(n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(count_matchings_dual(r));
}
BENCHMARK(BM_DualHalvedHexagon)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

// the largest region of the default verification sweep
static void BM_SearchLargestFernRegion(benchmark::State& state) {
  const auto r = state.range(0) ? build_R_primed(2, 3, 2, {2, 2, 2}) : build_R(2, 3, 2, {2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r).value);
  state.counters["cells"] = static_cast<double>(r.size());
}
BENCHMARK(BM_SearchLargestFernRegion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_FormulaLargestFernRegion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eval_R(2, 3, 2, {2, 2, 2}).value);
}
BENCHMARK(BM_FormulaLargestFernRegion);

static void BM_LgvDeterminant(benchmark::State& state) {
  std::vector<int> pos;
  for (int i = 0; i < state.range(0); ++i) pos.push_back(2 * i + 1);
  const auto m = lgv_matrix_Lbar_odd(pos);
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(1) ? determinant_bareiss(m) : determinant_exact(m));
  }
}
BENCHMARK(BM_LgvDeterminant)->ArgsProduct({{4, 8, 16}, {0, 1}});

BENCHMARK_MAIN();
