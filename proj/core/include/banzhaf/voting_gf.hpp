// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "banzhaf/exact.hpp"
#include "banzhaf/models.hpp"

namespace banzhaf {

// Coefficients of prod_j (1 + x^{w_j}): counts[s] = number of coalitions
// with total weight exactly s, for s in [0, W]. Exact big-integer entries;
// they sum to 2^n.
struct WeightCountVector {
  std::vector<boost::multiprecision::cpp_int> counts;
};

struct GfOptions {
  std::int64_t max_total_weight = 10'000'000;
  int threads = 0;
};

// Iterative convolution over the players.
WeightCountVector weight_distribution(const WeightedVotingGame& game);

// Exact swing counts in O(n * W) via per-player deflation: divide the full
// product by (1 + x^{w_i}) to get the weight distribution of coalitions
// excluding i, then sum the band [q - w_i, q - 1]. Polynomial in n and total
// weight, unlike exhaustive enumeration.
ExactResult gf_banzhaf(const WeightedVotingGame& game, const GfOptions& opts = {});

}  // namespace banzhaf
