#include <benchmark/benchmark.h>

#include "harmshear/specfun.hpp"

using harmshear::AppellF1Params;
using harmshear::Complex;
using harmshear::Gauss2F1Params;

namespace {

const AppellF1Params kF1{{1.0 / 3.0, 0.0}, {5.0 / 3.0, 0.0}, {1.0, 0.0}, {4.0 / 3.0, 0.0}};
const Gauss2F1Params k2F1{{0.5, 0.0}, {1.25, 0.0}, {1.5, 0.0}};

}  // namespace

static void BM_Gauss2F1Series(benchmark::State& state) {
  const Complex z{0.3, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(harmshear::gauss_2f1_series(k2F1, z));
}
BENCHMARK(BM_Gauss2F1Series);

static void BM_Gauss2F1Euler(benchmark::State& state) {
  const Complex z{0.3, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(harmshear::gauss_2f1_euler(k2F1, z));
}
BENCHMARK(BM_Gauss2F1Euler);

// Argument modulus in hundredths.
static void BM_AppellF1Series(benchmark::State& state) {
  const double r = state.range(0) / 100.0;
  const Complex x{0.0, r};
  for (auto _ : state) benchmark::DoNotOptimize(harmshear::appell_f1_series(kF1, x, -x));
}
BENCHMARK(BM_AppellF1Series)->Arg(30)->Arg(60)->Arg(90);

static void BM_AppellF1Euler(benchmark::State& state) {
  const double r = state.range(0) / 100.0;
  const Complex x{0.0, r};
  for (auto _ : state) benchmark::DoNotOptimize(harmshear::appell_f1_euler(kF1, x, -x));
}
BENCHMARK(BM_AppellF1Euler)->Arg(30)->Arg(60)->Arg(90);
