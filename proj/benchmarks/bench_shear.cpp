#include <benchmark/benchmark.h>

#include "harmshear/shear.hpp"

using namespace harmshear;

namespace {

const Complex kZ{0.45, 0.3};

ConformalMapSpec slit() {
  return ConformalMapSpec::four_slit(SlitMapParams::from_rational_gamma(1, 1, 1, 4));
}

}  // namespace

static void BM_SlitClosed(benchmark::State& state) {
  const auto map = slit();
  const MonomialDilatation dil(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(*shear_closed_form(map, dil, kZ));
}
BENCHMARK(BM_SlitClosed)->Arg(2)->Arg(6);

static void BM_SlitOracle(benchmark::State& state) {
  const auto map = slit();
  const MonomialDilatation dil(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shear_oracle(map, dil, kZ));
}
BENCHMARK(BM_SlitOracle)->Arg(2)->Arg(6);

static void BM_PolygonClosed(benchmark::State& state) {
  const auto map = ConformalMapSpec::regular_ngon(NGonParams(static_cast<int>(state.range(0))));
  const MonomialDilatation dil(2 * static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(*shear_closed_form(map, dil, kZ));
}
BENCHMARK(BM_PolygonClosed)->Arg(3)->Arg(5);

static void BM_PolygonOracle(benchmark::State& state) {
  const auto map = ConformalMapSpec::regular_ngon(NGonParams(static_cast<int>(state.range(0))));
  const MonomialDilatation dil(2 * static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shear_oracle(map, dil, kZ));
}
BENCHMARK(BM_PolygonOracle)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
