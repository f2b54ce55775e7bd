#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "dualbasis/pairing.hpp"
#include "dualbasis/quadrature.hpp"

namespace q = dualbasis::quadrature;

static void BM_PvIntegrateCot(benchmark::State& state) {
  const q::QuadratureConfig cfg{q::Rule::trapezoid, static_cast<int>(state.range(0))};
  const auto w = q::WeightSpec::sym();
  for (auto _ : state) {
    double v = q::pv_integrate([](double x) { return std::cos(2 * std::numbers::pi * x); }, w, cfg);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_PvIntegrateCot)->Arg(200)->Arg(2000);

static void BM_PairAltCell(benchmark::State& state) {
  for (auto _ : state) {
    auto r = dualbasis::pairing::pair_alt(1, 1, dualbasis::specfun::ClausenVariant::standard);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PairAltCell)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
