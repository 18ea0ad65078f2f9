// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/convert.hpp"

#include <limits>
#include <string>

#include "banzhaf/decimal.hpp"
#include "banzhaf/errors.hpp"

namespace banzhaf {

namespace {
std::int64_t to_int64(const BigInt& v, const char* what) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw PrecisionError(std::string("scaled ") + what +
                         " exceeds 64-bit integer range");
  return static_cast<std::int64_t>(v);
}
}  // namespace

Coalition VotingConversion::map_coalition(Coalition original) const {
  std::uint64_t complement_bits = 0;
  for (std::size_t j = 0; j < polarity.size(); ++j)
    if (polarity[j] == FeaturePolarity::complemented)
      complement_bits |= std::uint64_t{1} << j;
  return {original.mask ^ complement_bits, original.n};
}

VotingConversion linear_to_voting(const LinearThresholdGame& model,
                                  std::uint64_t scale) {
  if (scale == 0) throw ArgumentError("conversion scale must be positive");
  const int n = model.n_features();

  // Integrality is checked on the decimal strings, not the doubles.
  std::vector<std::int64_t> scaled(n);
  for (int j = 0; j < n; ++j) {
    const auto& text = model.weight_strings()[j];
    auto v = scaled_integer(Decimal::parse(text), scale);
    if (!v)
      throw PrecisionError("weight " + std::to_string(j) + " (" + text +
                           ") times scale " + std::to_string(scale) +
                           " is not an integer");
    scaled[j] = to_int64(*v, "weight");
  }
  auto scaled_bias = scaled_integer(Decimal::parse(model.bias_string()), scale);
  if (!scaled_bias)
    throw PrecisionError("bias (" + model.bias_string() + ") times scale " +
                         std::to_string(scale) + " is not an integer");

  // sum_j W_j x_j + B >= 0. Complementing each negative-weight feature
  // (x_j = 1 - y_j) turns its weight into -W_j >= 0 and moves W_j into the
  // constant term, leaving the quota q = -B + sum_{W_j < 0} |W_j|.
  VotingConversion result;
  result.scale = scale;
  result.polarity.resize(n, FeaturePolarity::direct);
  std::vector<std::int64_t> weights(n);
  BigInt quota = -*scaled_bias;
  for (int j = 0; j < n; ++j) {
    if (scaled[j] < 0) {
      result.polarity[j] = FeaturePolarity::complemented;
      weights[j] = -scaled[j];
      quota += weights[j];
    } else {
      weights[j] = scaled[j];
    }
  }

  if (quota <= 0) {
    // Every coalition meets a non-positive quota: the constant-1 game.
    result.constant_one = true;
    return result;
  }
  result.game.emplace(std::move(weights), to_int64(quota, "quota"));
  return result;
}

}  // namespace banzhaf
