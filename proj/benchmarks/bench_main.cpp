#include <benchmark/benchmark.h>

#include "optiframe/constructions.hpp"
#include "optiframe/cyclotomic.hpp"
#include "optiframe/enumeration.hpp"
#include "optiframe/frames.hpp"
#include "optiframe/geometry.hpp"
#include "optiframe/sampling.hpp"

using namespace optiframe;

static void BM_EnumerateClasses(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_solution_classes(m));
  state.SetComplexityN(std::int64_t{1} << m);
}
BENCHMARK(BM_EnumerateClasses)->DenseRange(12, 22, 2)->Unit(benchmark::kMillisecond);

static void BM_SignSumIsZero(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const SignVector eps = SignVector::from_index(0x5a5a5a5aULL & ((1ULL << m) - 1), m);
  for (auto _ : state) benchmark::DoNotOptimize(sign_sum_is_zero(eps));
}
BENCHMARK(BM_SignSumIsZero)->Arg(15)->Arg(30);

static void BM_SignSumTester(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const SignSumTester tester(m);
  const SignVector eps = SignVector::from_index(0x5a5a5a5aULL & ((1ULL << m) - 1), m);
  for (auto _ : state) benchmark::DoNotOptimize(tester.is_zero(eps));
}
BENCHMARK(BM_SignSumTester)->Arg(15)->Arg(30);

static void BM_LowerLipschitzNumeric(benchmark::State& state) {
  sampling::Rng rng(1);
  const Frame f = sampling::random_gaussian_frame(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lower_lipschitz_numeric(f));
}
BENCHMARK(BM_LowerLipschitzNumeric)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ConditionNumberTight(benchmark::State& state) {
  sampling::Rng rng(2);
  const Frame f = sampling::random_tight_frame(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(condition_number_tight(f));
}
BENCHMARK(BM_ConditionNumberTight)->Arg(8)->Arg(64)->Arg(512);

static void BM_MaxAbsProjectionSum(benchmark::State& state) {
  sampling::Rng rng(3);
  const auto edges = sampling::random_unit_vectors(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_abs_projection_sum(edges));
}
BENCHMARK(BM_MaxAbsProjectionSum)->RangeMultiplier(4)->Range(8, 2048);

static void BM_Diameter(benchmark::State& state) {
  sampling::Rng rng(4);
  const ConvexPolygon p =
      polygon_from_edges(sampling::random_convex_edges(rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(diameter(p));
}
BENCHMARK(BM_Diameter)->RangeMultiplier(4)->Range(8, 512);

BENCHMARK_MAIN();
