#include <benchmark/benchmark.h>

#include "ptlocus/airy.hpp"
#include "ptlocus/critical.hpp"
#include "ptlocus/gamma_curve.hpp"
#include "ptlocus/locus.hpp"
#include "ptlocus/trajectory.hpp"

using namespace ptlocus;

static void BM_EvalAiry(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0));
  const Complex z = std::polar(r, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(airy::eval_airy_pair(z));
}
BENCHMARK(BM_EvalAiry)->Arg(1)->Arg(6)->Arg(9)->Arg(30);

static void BM_Determinant(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(determinant(12.0, Complex(0.6, 0.1)));
}
BENCHMARK(BM_Determinant);

static void BM_DeterminantJet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(determinant_jet(12.0, Complex(0.6, 0.1)));
}
BENCHMARK(BM_DeterminantJet);

static void BM_Eigenvalues(benchmark::State& state) {
  const double eps = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(eps, default_re_max(eps, 10), 104));
}
BENCHMARK(BM_Eigenvalues)->Arg(1)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_CriticalPairs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(critical_pairs(10));
}
BENCHMARK(BM_CriticalPairs)->Unit(benchmark::kMillisecond);

static void BM_TraceGamma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trace_gamma(1, kGammaDefaultFrom, kGammaDefaultTo));
}
BENCHMARK(BM_TraceGamma)->Unit(benchmark::kMillisecond);

static void BM_TraceLambda(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trace_lambda(1, 1.0, 20.0));
}
BENCHMARK(BM_TraceLambda)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
