// Micro-benchmarks for the hot paths: lattice normal forms, Kottwitz set
// enumeration and the b(lambda) / minimal-lambda round trip.

#include "bgmu/catalog.hpp"
#include "bgmu/kottwitz.hpp"
#include "bgmu/strata.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace bgmu;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
  return m;
}

void bench_hnf(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}

void bench_snf(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(n, n, 43);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form_full(m));
}

void bench_enumerate_gl5(benchmark::State& state) {
  RootDatum gl5 = build_group({"GL", 5});
  IntVec mu{2, 1, 1, 0, 0}, b(5, 0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_kottwitz(gl5, mu, b));
}

void bench_enumerate_gl7(benchmark::State& state) {
  RootDatum gl7 = build_group({"GL", 7});
  IntVec mu{1, 1, 1, 0, 0, 0, 0}, b(7, 0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_kottwitz(gl7, mu, b));
}

void bench_b_of_lambda_gl7(benchmark::State& state) {
  RootDatum gl7 = build_group({"GL", 7});
  IntVec lam{1, 0, 0, 1, 0, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(b_of_lambda(gl7, lam));
}

void bench_minimal_lambda_gl7(benchmark::State& state) {
  RootDatum gl7 = build_group({"GL", 7});
  IntVec lift(7, 0);
  lift[0] = 4;
  SigmaConjClass c = basic_class(gl7, lift);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_lambda(gl7, c));
}

void bench_closure_poset_gl5(benchmark::State& state) {
  RootDatum gl5 = build_group({"GL", 5});
  KottwitzSet set = enumerate_kottwitz(gl5, {2, 1, 1, 0, 0}, IntVec(5, 0));
  for (auto _ : state) benchmark::DoNotOptimize(closure_poset(gl5, set));
}

}  // namespace

BENCHMARK(bench_hnf)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bench_snf)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bench_enumerate_gl5);
BENCHMARK(bench_enumerate_gl7);
BENCHMARK(bench_b_of_lambda_gl7);
BENCHMARK(bench_minimal_lambda_gl7);
BENCHMARK(bench_closure_poset_gl5);

BENCHMARK_MAIN();
