// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "banzhaf/exact.hpp"
#include "banzhaf/models.hpp"
#include "banzhaf/rng.hpp"
#include "banzhaf/sampling.hpp"
#include "banzhaf/voting_gf.hpp"

namespace banzhaf {
namespace {

MlpGame random_mlp(int n, int hidden, std::uint64_t seed) {
  SplitMix64 g(seed);
  std::vector<double> w1(static_cast<std::size_t>(n) * hidden), b1(hidden),
      w2(hidden);
  for (auto& v : w1) v = g.next_unit() * 2.0 - 1.0;
  for (auto& v : b1) v = g.next_unit() - 0.5;
  for (auto& v : w2) v = g.next_unit() * 2.0 - 1.0;
  return MlpGame(n, hidden, std::move(w1), std::move(b1), std::move(w2),
                 g.next_unit() - 0.5);
}

WeightedVotingGame random_voting(int n, std::uint64_t seed) {
  SplitMix64 g(seed);
  std::vector<std::int64_t> weights(n);
  std::int64_t total = 0;
  for (auto& w : weights) {
    w = static_cast<std::int64_t>(g.next_below(21));
    total += w;
  }
  return WeightedVotingGame(std::move(weights), std::max<std::int64_t>(total / 2, 1));
}

TruthTableGame random_table(int n, std::uint64_t seed) {
  SplitMix64 g(seed);
  std::vector<std::uint64_t> words(TruthTableGame::word_count(n));
  for (auto& w : words) w = g.next();
  return TruthTableGame(n, std::move(words));
}

// Full 2^n evaluation of a 20-unit relu network into a packed table. n = 22
// is the SPECT width.
void BM_BuildTruthTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MlpGame model = random_mlp(n, 20, 11);
  ExactOptions opts;
  opts.cap = 63;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_truth_table(model, opts));
  }
  state.SetComplexityN(std::int64_t{1} << n);
}
BENCHMARK(BM_BuildTruthTable)
    ->Arg(14)
    ->Arg(18)
    ->Arg(22)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

// XOR + popcount swing scans over an already-built table (all n features).
void BM_SwingScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TruthTableGame table = random_table(n, 12);
  ExactOptions opts;
  opts.cap = 63;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_banzhaf_table(table, opts));
  }
  state.SetComplexityN(static_cast<std::int64_t>(n) * (std::int64_t{1} << n));
}
BENCHMARK(BM_SwingScan)
    ->Arg(14)
    ->Arg(18)
    ->Arg(22)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

// Generating-function counts on integer-weighted games; cost scales with
// n * total weight rather than 2^n.
void BM_GeneratingFunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightedVotingGame game = random_voting(n, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf_banzhaf(game));
  }
}
BENCHMARK(BM_GeneratingFunction)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMicrosecond);

// Sampling throughput: k masks per feature on a 24-player voting game.
void BM_MonteCarlo(benchmark::State& state) {
  const WeightedVotingGame game = random_voting(24, 14);
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_banzhaf_k(game, k, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(k) * 24);
}
BENCHMARK(BM_MonteCarlo)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace banzhaf

BENCHMARK_MAIN();
