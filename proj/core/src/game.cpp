// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/game.hpp"

#include <cstdlib>
#include <string>

namespace banzhaf {

namespace {
void check_feature(const Game& game, int feature) {
  if (feature < 0 || feature >= game.n_features())
    throw ArgumentError("feature index " + std::to_string(feature) +
                        " out of range [0, " +
                        std::to_string(game.n_features()) + ")");
}
}  // namespace

int marginal_contribution(const Game& game, int feature, Coalition s) {
  check_feature(game, feature);
  return static_cast<int>(game.evaluate(s.with(feature))) -
         static_cast<int>(game.evaluate(s));
}

bool is_critical(const Game& game, int feature, Coalition s) {
  return std::abs(marginal_contribution(game, feature, s)) == 1;
}

}  // namespace banzhaf
