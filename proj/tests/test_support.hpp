// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "banzhaf/game.hpp"
#include "banzhaf/models.hpp"
#include "banzhaf/rng.hpp"

namespace banzhaf::testing {

// Independent swing-count oracle, straight from the definition: for every
// feature i and every coalition S with i not in S, compare F(S) against
// F(S u {i}) by calling the game directly. No packed tables, no bit scans,
// no shared code with the engines under test.
inline std::vector<std::uint64_t> brute_force_swings(const Game& game) {
  const int n = game.n_features();
  std::vector<std::uint64_t> swings(n, 0);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      if (mask & bit) continue;
      if (game.evaluate({mask, n}) != game.evaluate({mask | bit, n}))
        ++swings[i];
    }
  }
  return swings;
}

inline std::vector<double> brute_force_indices(const Game& game) {
  const std::vector<std::uint64_t> swings = brute_force_swings(game);
  std::vector<double> indices(swings.size());
  const double denom =
      static_cast<double>(std::uint64_t{1} << (game.n_features() - 1));
  for (std::size_t i = 0; i < swings.size(); ++i)
    indices[i] = static_cast<double>(swings[i]) / denom;
  return indices;
}

inline TruthTableGame random_truth_table(int n, SplitMix64& g) {
  std::vector<std::uint64_t> words(TruthTableGame::word_count(n));
  for (auto& w : words) w = g.next();
  if (n < 6) words[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  return TruthTableGame(n, std::move(words));
}

inline WeightedVotingGame random_voting_game(int n, std::int64_t max_weight,
                                             SplitMix64& g) {
  std::vector<std::int64_t> weights(n);
  std::int64_t total = 0;
  for (auto& w : weights) {
    w = static_cast<std::int64_t>(g.next_below(max_weight + 1));
    total += w;
  }
  // quota uniform in [1, max(W, 1)]
  const std::int64_t quota =
      1 + static_cast<std::int64_t>(g.next_below(std::max<std::int64_t>(total, 1)));
  return WeightedVotingGame(std::move(weights), quota);
}

// Tiles a base game over one extra, ignored feature: the new top feature is
// a dummy by construction.
inline TruthTableGame with_ignored_feature(const TruthTableGame& base) {
  const int n = base.n_features();
  TruthTableGame wide = TruthTableGame::filled(n + 1, false);
  const std::uint64_t half = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < half; ++m) {
    const bool v = base.bit(m) != 0;
    wide.set_bit(m, v);
    wide.set_bit(m | half, v);
  }
  return wide;
}

}  // namespace banzhaf::testing
