#include "weilzeta/arith.hpp"
#include "weilzeta/primesets.hpp"
#include "weilzeta/quadform.hpp"
#include "weilzeta/zeta.hpp"

#include <benchmark/benchmark.h>

using namespace weilzeta;

static void BM_SievePrimes(benchmark::State& state) {
  const u64 limit = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sieve_primes(limit));
  state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_SievePrimes)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

static void BM_FactorizeWords(benchmark::State& state) {
  u64 n = 0x9E3779B97F4A7C15ull;
  for (auto _ : state) {
    n = n * 6364136223846793005ull + 1442695040888963407ull;
    benchmark::DoNotOptimize(factorize(n | 1));
  }
}
BENCHMARK(BM_FactorizeWords)->Unit(benchmark::kMicrosecond);

static void BM_RepresentsCoprime(benchmark::State& state) {
  const BinaryQuadraticForm f{1, 0, 1};
  u64 n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(represents_coprime(f, n));
    n = n % 1'000'000 + 1;
  }
}
BENCHMARK(BM_RepresentsCoprime);

static void BM_EnumeratePf(benchmark::State& state) {
  const BinaryQuadraticForm f{1, 0, 3};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_Pf(f, state.range(0)));
}
BENCHMARK(BM_EnumeratePf)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_HomCountCyclotomic(benchmark::State& state) {
  const auto S1 = standard_set(StandardSet::S1);
  const auto primes = sieve_primes(1'000'000);
  std::size_t i = 0;
  for (auto _ : state) {
    const u64 p = primes[i++ % primes.size()];
    benchmark::DoNotOptimize(hom_count(S1, p, max_exponent_in_range(p)));
  }
}
BENCHMARK(BM_HomCountCyclotomic)->Unit(benchmark::kMicrosecond);

static void BM_WeilLogPartial(benchmark::State& state) {
  const auto S1 = standard_set(StandardSet::S1);
  for (auto _ : state) benchmark::DoNotOptimize(weil_log_partial(S1, 2.5, state.range(0)));
}
BENCHMARK(BM_WeilLogPartial)->Arg(100'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
