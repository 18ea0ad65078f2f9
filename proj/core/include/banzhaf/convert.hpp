// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "banzhaf/models.hpp"

namespace banzhaf {

enum class FeaturePolarity { direct, complemented };

// Result of rewriting a linear threshold model as a weighted voting game.
//
// Negative scaled weights are removed by complementing the feature
// (x_j -> 1 - y_j), which flips the weight sign and shifts the quota. The
// transformed game agrees with the original on every coalition after the
// polarity map, so per-feature swing counts and Banzhaf indices carry over
// unchanged.
struct VotingConversion {
  // Quota shifted to <= 0: every coalition wins, all features are dummies.
  // game is disengaged in that case.
  bool constant_one = false;
  std::optional<WeightedVotingGame> game;
  std::vector<FeaturePolarity> polarity;
  std::uint64_t scale = 1;

  // Maps an original-encoding coalition to the transformed encoding by
  // flipping every complemented feature.
  Coalition map_coalition(Coalition original) const;
};

// Exact conversion: requires scale * w_j and scale * bias to be integers,
// checked against the decimal-string representation of the model. Refuses
// (PrecisionError naming the offending weight) rather than rounding.
VotingConversion linear_to_voting(const LinearThresholdGame& model,
                                  std::uint64_t scale);

}  // namespace banzhaf
