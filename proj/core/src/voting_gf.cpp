// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/voting_gf.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "banzhaf/errors.hpp"

namespace banzhaf {

namespace {
using boost::multiprecision::cpp_int;

std::uint64_t to_u64(const cpp_int& v) {
  // Swing counts are at most 2^(n-1) <= 2^62 for n <= 63.
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw CapacityError("swing count exceeds 64-bit range");
  return static_cast<std::uint64_t>(v);
}
}  // namespace

WeightCountVector weight_distribution(const WeightedVotingGame& game) {
  const auto& weights = game.weights();
  const std::int64_t total = game.total_weight();

  WeightCountVector result;
  auto& counts = result.counts;
  counts.assign(static_cast<std::size_t>(total) + 1, 0);
  counts[0] = 1;

  // Multiply by (1 + x^w) one player at a time. Descending order makes the
  // update in-place; w = 0 degenerates to doubling every entry.
  std::int64_t reach = 0;  // highest weight sum representable so far
  for (std::int64_t w : weights) {
    if (w == 0) {
      for (std::int64_t s = 0; s <= reach; ++s) counts[s] *= 2;
      continue;
    }
    reach += w;
    for (std::int64_t s = reach; s >= w; --s) counts[s] += counts[s - w];
  }
  return result;
}

ExactResult gf_banzhaf(const WeightedVotingGame& game, const GfOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const int n = game.n_features();
  const std::int64_t total = game.total_weight();
  const std::int64_t quota = game.quota();

  if (total > opts.max_total_weight)
    throw CapacityError("total weight " + std::to_string(total) +
                        " exceeds the generating-function cap of " +
                        std::to_string(opts.max_total_weight) +
                        "; use the enumeration engine or raise the cap");

  const WeightCountVector distribution = weight_distribution(game);
  const auto& counts = distribution.counts;

  // Deflate the product per player: c_i[s] counts coalitions without i at
  // weight s. Only s <= quota - 1 matter for the swing band, and c_i's
  // support ends at total - w_i.
  std::vector<std::uint64_t> swings(n, 0);
  const int threads = [&] {
    if (opts.threads > 0) return std::min(opts.threads, n);
    const unsigned hw = std::thread::hardware_concurrency();
    return std::min(hw ? static_cast<int>(hw) : 1, n);
  }();

  auto deflate_player = [&](int i, std::vector<cpp_int>& scratch) {
    const std::int64_t w = game.weights()[i];
    if (w == 0) return;  // empty band [quota, quota-1]: zero swings
    const std::int64_t upper = std::min<std::int64_t>(quota - 1, total - w);
    const std::int64_t lower = std::max<std::int64_t>(0, quota - w);
    if (upper < 0) return;

    scratch.assign(static_cast<std::size_t>(upper) + 1, 0);
    cpp_int band_sum = 0;
    for (std::int64_t s = 0; s <= upper; ++s) {
      scratch[s] = s < w ? counts[s] : counts[s] - scratch[s - w];
      if (s >= lower) band_sum += scratch[s];
    }
    swings[i] = to_u64(band_sum);
  };

  if (threads <= 1) {
    std::vector<cpp_int> scratch;
    for (int i = 0; i < n; ++i) deflate_player(i, scratch);
  } else {
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t)
      workers.emplace_back([&, t] {
        std::vector<cpp_int> scratch;
        for (int i = t; i < n; i += threads) deflate_player(i, scratch);
      });
    for (auto& w : workers) w.join();
  }

  ExactResult result;
  result.n = n;
  result.swing_counts = std::move(swings);
  result.indices.resize(n);
  for (int i = 0; i < n; ++i) {
    result.indices[i] =
        std::ldexp(static_cast<double>(result.swing_counts[i]), -(n - 1));
    if (result.swing_counts[i] == 0) result.dummies.push_back(i);
  }
  result.evaluations = 0;  // the DP never calls evaluate
  result.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace banzhaf
