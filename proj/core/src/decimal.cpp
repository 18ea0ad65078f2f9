// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/decimal.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "banzhaf/errors.hpp"

namespace banzhaf {

Decimal Decimal::parse(std::string_view text) {
  std::size_t pos = 0;
  const auto fail = [&](const char* why) {
    throw ParseError("malformed decimal \"" + std::string(text) + "\": " + why);
  };
  if (text.empty()) fail("empty");

  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }

  BigInt mantissa = 0;
  int exponent = 0;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    mantissa = mantissa * 10 + (text[pos] - '0');
    ++digits;
    ++pos;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      mantissa = mantissa * 10 + (text[pos] - '0');
      --exponent;
      ++digits;
      ++pos;
    }
  }
  if (digits == 0) fail("no digits");

  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    if (pos == text.size()) fail("empty exponent");
    long exp_value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      exp_value = exp_value * 10 + (text[pos] - '0');
      if (exp_value > 100000) fail("exponent out of range");
      ++pos;
    }
    exponent += static_cast<int>(exp_negative ? -exp_value : exp_value);
  }
  if (pos != text.size()) fail("trailing characters");

  if (negative) mantissa = -mantissa;
  return Decimal{std::move(mantissa), exponent};
}

std::optional<BigInt> scaled_integer(const Decimal& value, std::uint64_t scale) {
  BigInt product = value.mantissa * BigInt(scale);
  if (value.exponent >= 0) {
    for (int i = 0; i < value.exponent; ++i) product *= 10;
    return product;
  }
  BigInt divisor = 1;
  for (int i = 0; i < -value.exponent; ++i) divisor *= 10;
  if (product % divisor != 0) return std::nullopt;
  return product / divisor;
}

}  // namespace banzhaf
