// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "banzhaf/dataset.hpp"
#include "banzhaf/game.hpp"

namespace banzhaf {

// Per-feature independent Bernoulli presence probabilities.
struct ProductDistribution {
  std::vector<double> probs;  // each in [0, 1]
};

struct EstimateResult {
  std::vector<double> indices;  // flip count / k, each in [0, 1]
  std::uint64_t k = 0;          // samples per feature
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::optional<double> half_width;  // declared confidence half-width (= epsilon)
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;
};

// Hoeffding bound for a mean of [0,1] variables:
//   k = ceil(ln(2/delta) / (2 epsilon^2))
// gives P(|estimate - true| >= epsilon) <= delta independently per feature.
std::uint64_t required_samples(double epsilon, double delta);

// Uniform Monte Carlo estimate. For each feature i, k masks are drawn
// uniformly with bit i cleared (S ~ U[2^(A\{i})]) and the flip
// |F(S u {i}) - F(S)| is averaged. Streams are keyed by (seed, feature), so
// the result is bit-identical for any thread count.
//
// Clearing bit i before the flip test measures |F(S u {i}) - F(S \ {i})|,
// under which the uniform-expectation estimator matches the 1/2^(n-1)
// normalized index exactly rather than up to a factor of two.
EstimateResult monte_carlo_banzhaf(const Game& game, double epsilon, double delta,
                                   std::uint64_t seed, int threads = 0);

// Same estimator with an explicit per-feature sample count.
EstimateResult monte_carlo_banzhaf_k(const Game& game, std::uint64_t k,
                                     std::uint64_t seed, int threads = 0);

// Monte Carlo under a product distribution: masks are drawn feature-wise
// Bernoulli(probs[j]), then bit i is cleared. probs all 0.5 coincides in
// distribution with the uniform estimator.
EstimateResult weighted_banzhaf(const Game& game, const ProductDistribution& dist,
                                std::uint64_t k, std::uint64_t seed,
                                int threads = 0);

// Empirical index over a dataset: the per-row rate at which toggling
// feature i flips the outcome, (1/|X|) sum_x |F(x | i) - F(x \ i)|.
// Duplicate rows count each time.
//
// literal_delta instead applies the marginal-contribution definition to each
// row as-is, so rows already containing i contribute 0.
std::vector<double> empirical_banzhaf(const Game& game, const Dataset& data,
                                      bool literal_delta = false);

}  // namespace banzhaf
