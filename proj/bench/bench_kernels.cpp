// Serial reference kernels against the OpenMP kernels on the exhaustive checks.
// Argument 0 selects the serial scan, 1 the parallel one.

#include <benchmark/benchmark.h>

#include "hopfkit/calculus.hpp"
#include "hopfkit/parallel.hpp"

using namespace hopfkit;

namespace {

void select(const benchmark::State& state) {
  set_execution(state.range(0) == 0 ? Execution::serial : Execution::parallel);
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_HopfSuiteS3Functions(benchmark::State& state) {
  select(state);
  BialgebraPtr b = function_algebra(symmetric_group_3());
  for (auto _ : state) benchmark::DoNotOptimize(verify(*b, Level::hopf).passed());
  label(state);
}

void BM_YDAdjointRegularS3(benchmark::State& state) {
  select(state);
  YDModule m = adjoint_regular_yd(group_algebra(symmetric_group_3()));
  for (auto _ : state) benchmark::DoNotOptimize(check_yd(m).passed());
  label(state);
}

void BM_BraidRelationS3(benchmark::State& state) {
  select(state);
  YangBaxterOperator r = yang_baxter(yd_ll_to_rr(adjoint_regular_yd(group_algebra(symmetric_group_3()))));
  for (auto _ : state) benchmark::DoNotOptimize(r.verify().passed());
  label(state);
}

void BM_DualCovarianceH4(benchmark::State& state) {
  select(state);
  BialgebraPtr h = sweedler_h4();
  DualFreeBimodule d = dualize(FreeBimodule(rule_from_left_module(h, left_regular_module(h->algebra_ptr()))));
  for (auto _ : state) benchmark::DoNotOptimize(check_dual_covariance(d, co_opposite(h)).passed());
  label(state);
}

void BM_BracketS3(benchmark::State& state) {
  select(state);
  FODC c = finite_group_calculus(symmetric_group_3(), transpositions(symmetric_group_3()));
  for (auto _ : state) benchmark::DoNotOptimize(quantum_lie_bracket(c).closed());
  label(state);
}

}  // namespace

BENCHMARK(BM_HopfSuiteS3Functions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_YDAdjointRegularS3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BraidRelationS3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualCovarianceH4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketS3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
