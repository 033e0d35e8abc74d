#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "cglab/characters.hpp"
#include "cglab/charsum.hpp"
#include "cglab/congruence.hpp"
#include "cglab/coverage.hpp"
#include "cglab/primes.hpp"

namespace {

using namespace cglab;

void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(PrimeTable::sieve(limit).primes().size());
}
BENCHMARK(BM_Sieve)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

void BM_GroupBuild(benchmark::State& state) {
  const auto m = Modulus::build(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_group(m).size());
}
BENCHMARK(BM_GroupBuild)->Arg(10007)->Arg(720720)->Arg(1'000'003)->Unit(benchmark::kMicrosecond);

// Sums over the first N integers for every character of a prime modulus.
void BM_CharacterSweep(benchmark::State& state) {
  const auto g = build_group(Modulus::build(static_cast<u64>(state.range(0))));
  std::vector<i64> values(static_cast<std::size_t>(state.range(1)));
  std::iota(values.begin(), values.end(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(character_sums(g, values).data());
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size() * values.size()));
}
BENCHMARK(BM_CharacterSweep)->Args({1009, 100})->Args({10007, 1000})->Unit(benchmark::kMillisecond);

void BM_ProductSet(benchmark::State& state) {
  const u64 m = static_cast<u64>(state.range(0));
  const u64 n = ceil_power(m, 0.4);
  const std::vector<u64> bounds = {n, n, n};
  const auto mod = Modulus::build(m);
  for (auto _ : state) benchmark::DoNotOptimize(product_set(mod, bounds).covered_total());
}
BENCHMARK(BM_ProductSet)->Arg(10007)->Arg(100003)->Arg(1'000'003)->Unit(benchmark::kMillisecond);

void BM_CollisionCount(benchmark::State& state) {
  const auto mod = Modulus::build(1009);
  const std::vector<u64> bounds(3, static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(collision_count(mod, bounds).collisions);
}
BENCHMARK(BM_CollisionCount)->Arg(20)->Arg(100);

void BM_CountJ(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  const u64 n = p - p / 10;
  const auto primes = PrimeTable::sieve(n);
  const CongruenceInstance inst{p, n, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(count_J(inst, primes));
}
BENCHMARK(BM_CountJ)->Arg(10007)->Arg(100003)->Unit(benchmark::kMillisecond);

void BM_DecomposeJ(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  const u64 n = p - p / 10;
  const auto primes = PrimeTable::sieve(n);
  const auto g = build_group(Modulus::build(p));
  const CongruenceInstance inst{p, n, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(decompose_J(inst, g, primes).real());
}
BENCHMARK(BM_DecomposeJ)->Arg(1009)->Arg(10007)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
