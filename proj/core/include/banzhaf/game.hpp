// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "banzhaf/coalition.hpp"

namespace banzhaf {

// Binary game outcome, always 0 or 1.
using Outcome = std::uint8_t;

// A simple coalitional game: a total, deterministic map from coalitions to
// {0, 1}. A trained binary classifier over {0,1}^n is exactly this object.
//
// Implementations must be immutable after construction; evaluate() is pure
// and safe to call concurrently from many threads.
class Game {
 public:
  virtual ~Game() = default;

  virtual int n_features() const = 0;

  // Total over all 2^n coalitions. Same coalition, same outcome.
  virtual Outcome evaluate(Coalition s) const = 0;
};

// F(S u {i}) - F(S). Always 0 when i is already in S.
int marginal_contribution(const Game& game, int feature, Coalition s);

// True iff |marginal_contribution| = 1, in either direction: a feature is
// critical both when joining flips a loss to a win and when leaving flips a
// win to a loss.
bool is_critical(const Game& game, int feature, Coalition s);

}  // namespace banzhaf
