#include <benchmark/benchmark.h>

#include "hwvkit/conj.hpp"
#include "hwvkit/highest_weight.hpp"

using namespace hwvkit;

static void BM_EnumerateTriples(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t n = 0;
    for (const auto& nu : compositions_of(t, 2))
      for (const auto& mu : partitions_of(t, 3, t))
        for (const auto& lambda : partitions_of(t, 3, t)) n += enumerate_triples(3, 3, 2, mu, lambda, nu).size();
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateTriples)->DenseRange(2, 5);

static void BM_TwistedBideterminant(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  auto triples = enumerate_triples(3, 3, 2, Partition{t - 1, 1}, Partition{t - 1, 1}, {1, t - 1});
  const auto& tr = triples.front();
  TwistedBidetSpec spec{tr, canonical_tableau(tr.source()), canonical_tableau(tr.target()), 3, 3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(twisted_bideterminant(spec, CoefficientRing::rationals()));
}
BENCHMARK(BM_TwistedBideterminant)->DenseRange(2, 5);

static void BM_HwvOracle(benchmark::State& state) {
  HwvRequest req;
  req.r = 3;
  req.s = 3;
  req.m = 2;
  req.mu = Partition{2, 1, 1};
  req.lambda = Partition{2, 1, 1};
  req.nu = {2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(hwv_oracle(req));
}
BENCHMARK(BM_HwvOracle);

static void BM_Filtration(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_filtration(2, 3, 2, {1, 3}, CoefficientRing::prime_field(2)));
}
BENCHMARK(BM_Filtration)->Unit(benchmark::kMillisecond);

static void BM_ConjOracle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conj_hwv_oracle(3, {1, 0, -1}, d, CoefficientRing::rationals()));
}
BENCHMARK(BM_ConjOracle)->DenseRange(1, 4);
BENCHMARK_MAIN();
