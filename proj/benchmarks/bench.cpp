#include <benchmark/benchmark.h>

#include "surfcoh/stacks.hpp"
#include "surfcoh/surfaces.hpp"

using namespace surfcoh;

namespace {

void BM_LaurentMul(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const LaurentPoly a = (LaurentPoly::one() + LaurentPoly::monomial(1, 3)).pow(n);
  const LaurentPoly b = (LaurentPoly::one() + LaurentPoly::monomial(1, 1)).pow(n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMul)->Arg(16)->Arg(64)->Arg(256);

void BM_CommutatorPowerFolded(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  const SheafObject f = commutator_pushforward();
  for (auto _ : state) benchmark::DoNotOptimize(power(f, g));
}
BENCHMARK(BM_CommutatorPowerFolded)->Arg(4)->Arg(8)->Arg(16);

void BM_CommutatorPowerClosed(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(commutator_power_closed(g));
}
BENCHMARK(BM_CommutatorPowerClosed)->Arg(16)->Arg(64)->Arg(256);

void BM_RepPoincare(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rep_poincare(g));
}
BENCHMARK(BM_RepPoincare)->Arg(8)->Arg(32)->Arg(128);

void BM_TwistedClosedFormula(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(twisted_rep_poincare_closed(g));
}
BENCHMARK(BM_TwistedClosedFormula)->Arg(8)->Arg(32)->Arg(128);

void BM_CharStackSeries(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(charstack_cohomology(g, false, CohomologyVariant::CompactSupport));
}
BENCHMARK(BM_CharStackSeries)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
