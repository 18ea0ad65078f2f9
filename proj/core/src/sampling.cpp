// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/sampling.hpp"

#include <chrono>
#include <cmath>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "banzhaf/errors.hpp"
#include "banzhaf/rng.hpp"

namespace banzhaf {

namespace {

int worker_count(int requested, int n) {
  if (requested > 0) return std::min(requested, n);
  const unsigned hw = std::thread::hardware_concurrency();
  return std::min(hw ? static_cast<int>(hw) : 1, n);
}

// Runs fn(i) for every feature, striding features across workers. Results
// only depend on i, so scheduling never shows up in the output.
template <typename Fn>
void for_each_feature(int n, int threads, Fn fn) {
  const int workers = worker_count(threads, n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += workers) fn(i);
    });
  for (auto& w : pool) w.join();
}

EstimateResult estimate_with_masks(const Game& game, std::uint64_t k,
                                   std::uint64_t seed, int threads,
                                   bool weighted,
                                   std::span<const double> probs) {
  const auto start = std::chrono::steady_clock::now();
  const int n = game.n_features();
  if (k == 0) throw ArgumentError("sample count must be at least 1");

  EstimateResult result;
  result.indices.assign(n, 0.0);
  result.k = k;
  result.seed = seed;

  const std::uint64_t all = full_mask(n);
  for_each_feature(n, threads, [&](int i) {
    SplitMix64 g = stream_for(seed, static_cast<std::uint64_t>(i));
    const std::uint64_t bit = std::uint64_t{1} << i;
    std::uint64_t flips = 0;
    for (std::uint64_t s = 0; s < k; ++s) {
      std::uint64_t mask;
      if (!weighted) {
        mask = g.next() & all;
      } else {
        mask = 0;
        for (int j = 0; j < n; ++j)
          if (g.next_unit() < probs[j]) mask |= std::uint64_t{1} << j;
      }
      mask &= ~bit;
      const Coalition without{mask, n};
      const Coalition with{mask | bit, n};
      if (game.evaluate(with) != game.evaluate(without)) ++flips;
    }
    result.indices[i] =
        static_cast<double>(flips) / static_cast<double>(k);
  });

  result.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace

std::uint64_t required_samples(double epsilon, double delta) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw ArgumentError("epsilon must lie in (0, 1), got " +
                        std::to_string(epsilon));
  if (!(delta > 0.0) || !(delta < 1.0))
    throw ArgumentError("delta must lie in (0, 1), got " +
                        std::to_string(delta));
  const double k = std::ceil(std::log(2.0 / delta) / (2.0 * epsilon * epsilon));
  return static_cast<std::uint64_t>(k);
}

EstimateResult monte_carlo_banzhaf(const Game& game, double epsilon,
                                   double delta, std::uint64_t seed,
                                   int threads) {
  const std::uint64_t k = required_samples(epsilon, delta);
  EstimateResult result = estimate_with_masks(game, k, seed, threads,
                                              /*weighted=*/false, {});
  result.epsilon = epsilon;
  result.delta = delta;
  result.half_width = epsilon;
  return result;
}

EstimateResult monte_carlo_banzhaf_k(const Game& game, std::uint64_t k,
                                     std::uint64_t seed, int threads) {
  return estimate_with_masks(game, k, seed, threads, /*weighted=*/false, {});
}

EstimateResult weighted_banzhaf(const Game& game, const ProductDistribution& dist,
                                std::uint64_t k, std::uint64_t seed,
                                int threads) {
  const int n = game.n_features();
  if (static_cast<int>(dist.probs.size()) != n)
    throw ArgumentError("distribution has " +
                        std::to_string(dist.probs.size()) +
                        " probabilities for " + std::to_string(n) +
                        " features");
  for (std::size_t j = 0; j < dist.probs.size(); ++j)
    if (!(dist.probs[j] >= 0.0) || !(dist.probs[j] <= 1.0))
      throw ArgumentError("probability for feature " + std::to_string(j) +
                          " is outside [0, 1]");
  return estimate_with_masks(game, k, seed, threads, /*weighted=*/true,
                             dist.probs);
}

std::vector<double> empirical_banzhaf(const Game& game, const Dataset& data,
                                      bool literal_delta) {
  const int n = game.n_features();
  if (data.n != n)
    throw ArgumentError("dataset width " + std::to_string(data.n) +
                        " does not match the model's " + std::to_string(n) +
                        " features");
  if (data.rows.empty()) throw ArgumentError("dataset is empty");

  std::vector<double> indices(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    std::uint64_t flips = 0;
    for (std::uint64_t row : data.rows) {
      const std::uint64_t base = literal_delta ? row : (row & ~bit);
      const Coalition without{base, n};
      const Coalition with{base | bit, n};
      if (game.evaluate(with) != game.evaluate(without)) ++flips;
    }
    indices[i] =
        static_cast<double>(flips) / static_cast<double>(data.rows.size());
  }
  return indices;
}

}  // namespace banzhaf
