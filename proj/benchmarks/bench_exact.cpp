#include <benchmark/benchmark.h>

#include "dualbasis/exactcore.hpp"
#include "dualbasis/ladder.hpp"

static void BM_BernoulliNumbers(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto b = dualbasis::bernoulli_numbers(n);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_BernoulliNumbers)->RangeMultiplier(2)->Range(8, 128);

static void BM_LadderCommutator(benchmark::State& state) {
  const auto D = static_cast<std::size_t>(state.range(0));
  const auto L = dualbasis::ladder::op_L(D);
  const auto R = dualbasis::ladder::op_R(D);
  for (auto _ : state) {
    auto c = dualbasis::ladder::commutator(L, R);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_LadderCommutator)->Arg(8)->Arg(18);
