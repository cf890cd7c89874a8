#include <benchmark/benchmark.h>

#include "b2v/intertwine.hpp"
#include "b2v/moments.hpp"
#include "b2v/quad.hpp"

using namespace b2v;

namespace {

// An index of the given total spread as evenly as possible.
MultiIndex4 spread(unsigned total) {
  const unsigned q = total / 4;
  const unsigned r = total % 4;
  return MultiIndex4(q + (r > 0 ? 1 : 0), q + (r > 1 ? 1 : 0), q + (r > 2 ? 1 : 0), q);
}

void BM_MomentSingleSum(benchmark::State& state) {
  const MultiIndex4 a = spread(static_cast<unsigned>(state.range(0)));
  const Kappa k(Rational(5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(s_single(a, k));
}
BENCHMARK(BM_MomentSingleSum)->DenseRange(4, 24, 4);

void BM_MomentDoubleSum(benchmark::State& state) {
  const MultiIndex4 a = spread(static_cast<unsigned>(state.range(0)));
  const Kappa k(Rational(5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(s_double(a, k));
}
BENCHMARK(BM_MomentDoubleSum)->DenseRange(4, 24, 4);

Polynomial x_monomial(unsigned a, unsigned b) {
  return Polynomial::monomial(VarSet::X, Exponent{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)});
}

void BM_ApplyVFormula(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const Kappa k(Rational(1, 3));
  for (auto _ : state) {
    // Fresh functional each time so the moment cache does not hide the work.
    const MomentFunctional mf(k);
    benchmark::DoNotOptimize(apply_V(x_monomial(n - n / 2, n / 2), mf));
  }
}
BENCHMARK(BM_ApplyVFormula)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ApplyVOracle(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const Kappa k(Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(apply_V_oracle(x_monomial(n - n / 2, n / 2), k));
}
BENCHMARK(BM_ApplyVOracle)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

void BM_NumericMoment(benchmark::State& state) {
  const unsigned nodes = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numeric_moment({2, 2, 2, 2}, 1.7, nodes));
}
BENCHMARK(BM_NumericMoment)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_NumericBessel(benchmark::State& state) {
  const unsigned nodes = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numeric_bessel({0.6, -0.8}, {0.3, 0.5}, 1.7, nodes));
}
BENCHMARK(BM_NumericBessel)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
