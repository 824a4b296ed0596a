// Naive (OpenMP) vs Karatsuba (OpenMP tasks) vs the serial K5 reference.

#include <random>

#include <benchmark/benchmark.h>

#include "qseries/kernels.hpp"

namespace {

using qseries::K5;
using qseries::Rational;

std::vector<K5> random_k5(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-99, 99), den(1, 12);
  std::vector<K5> v(n);
  for (K5& c : v) c = K5(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  return v;
}

void BM_reference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_k5(n, 1), b = random_k5(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qseries::kernels::mul_reference(a, b, n));
}

void BM_naive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_k5(n, 1), b = random_k5(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qseries::kernels::mul_k5(a, b, n, qseries::Kernel::naive));
}

void BM_karatsuba(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_k5(n, 1), b = random_k5(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qseries::kernels::mul_k5(a, b, n, qseries::Kernel::karatsuba));
}

}  // namespace

BENCHMARK(BM_reference)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_naive)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_karatsuba)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
