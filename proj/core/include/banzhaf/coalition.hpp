// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <compare>
#include <cstdint>

#include "banzhaf/errors.hpp"

namespace banzhaf {

// Hard cap on the number of features: one machine word per coalition.
inline constexpr int kMaxFeatures = 63;

// All-ones mask over the low n bits.
constexpr std::uint64_t full_mask(int n) { return (std::uint64_t{1} << n) - 1; }

// A coalition of features, interchangeable with a binary feature vector in
// {0,1}^n: bit j set <=> feature j present. Bits at positions >= n are zero.
//
// This is a trivially copyable value type; hot loops construct it directly.
// Use checked() at API boundaries where the inputs are untrusted.
struct Coalition {
  std::uint64_t mask = 0;
  int n = 0;

  static Coalition checked(std::uint64_t mask, int n) {
    if (n < 1 || n > kMaxFeatures)
      throw ArgumentError("coalition: feature count must be in [1, 63], got " +
                          std::to_string(n));
    if (mask & ~full_mask(n))
      throw ArgumentError("coalition: mask has bits set at positions >= n");
    return Coalition{mask, n};
  }

  constexpr bool contains(int i) const { return (mask >> i) & 1u; }
  constexpr Coalition with(int i) const { return {mask | (std::uint64_t{1} << i), n}; }
  constexpr Coalition without(int i) const { return {mask & ~(std::uint64_t{1} << i), n}; }
  constexpr int size() const { return std::popcount(mask); }

  friend constexpr auto operator<=>(const Coalition&, const Coalition&) = default;
};

}  // namespace banzhaf
