// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace banzhaf {

using BigInt = boost::multiprecision::cpp_int;

// Exact base-10 value mantissa * 10^exponent, parsed from a decimal string.
// Used where float rounding must not decide anything: the integrality check
// of linear-to-voting conversion.
struct Decimal {
  BigInt mantissa;
  int exponent = 0;

  // Accepts [+-]digits[.digits][(e|E)[+-]digits]. Throws ParseError.
  static Decimal parse(std::string_view text);
};

// scale * value when that product is an exact integer, nullopt otherwise.
std::optional<BigInt> scaled_integer(const Decimal& value, std::uint64_t scale);

}  // namespace banzhaf
