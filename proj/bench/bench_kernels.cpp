#include "bmm/characters.hpp"
#include "bmm/filtration.hpp"
#include "bmm/linalg.hpp"
#include "bmm/verma.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace bmm;

namespace {

RationalMatrix random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  RationalMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = make_rational(d(rng), 1 + (rng() % 4));
  return m;
}

void BM_RankSerial(benchmark::State& state) {
  const auto m = random_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(reference::rank(m));
}

void BM_RankParallel(benchmark::State& state) {
  const auto m = random_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

// fresh module per iteration so nothing is cached between runs
void BM_GramSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VirasoroModule m(make_rational(-22, 5), make_rational(-1, 5));
    benchmark::DoNotOptimize(m.gram_reference(n));
  }
}

void BM_GramParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VirasoroModule m(make_rational(-22, 5), make_rational(-1, 5));
    benchmark::DoNotOptimize(m.gram(n));
  }
}

void BM_RefinedCharacter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ModelParams mp = boundary_params(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pbw_refined_irr(mp.c, mp.h, n, n));
}

}  // namespace

BENCHMARK(BM_RankSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RefinedCharacter)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
