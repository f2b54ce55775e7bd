#include <benchmark/benchmark.h>

#include "dualbasis/specfun.hpp"

namespace sf = dualbasis::specfun;

static void BM_Zeta(benchmark::State& state) {
  const auto terms = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto v = sf::zeta(4.0, terms);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Zeta)->RangeMultiplier(10)->Range(1000, 100000);

static void BM_DirichletBeta(benchmark::State& state) {
  for (auto _ : state) {
    auto v = sf::dirichlet_beta(5.0);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_DirichletBeta);

// both Clausen variants at a generic point
static void BM_ClausenA(benchmark::State& state) {
  const auto variant = state.range(0) == 0 ? sf::ClausenVariant::literal : sf::ClausenVariant::standard;
  for (auto _ : state) {
    auto v = sf::clausen_A(3, 0.37, variant, 10000);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ClausenA)->Arg(0)->Arg(1);

static void BM_LerchUnitCircle(benchmark::State& state) {
  const auto z = sf::UnitComplex::from_turns(0.125);
  for (auto _ : state) {
    auto v = sf::lerch_phi(z, 2.0, 1.0);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_LerchUnitCircle);
