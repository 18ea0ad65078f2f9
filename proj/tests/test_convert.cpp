// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"

#include "banzhaf/convert.hpp"
#include "banzhaf/decimal.hpp"
#include "banzhaf/errors.hpp"
#include "banzhaf/exact.hpp"
#include "banzhaf/voting_gf.hpp"
#include "test_support.hpp"

namespace banzhaf {
namespace {

TEST_CASE("a mixed-sign model converts by complementing negative features") {
  const LinearThresholdGame model({-2.0, 1.0}, 0.5);
  const VotingConversion conv = linear_to_voting(model, 2);
  REQUIRE_FALSE(conv.constant_one);
  REQUIRE(conv.game.has_value());
  CHECK(conv.game->weights() == std::vector<std::int64_t>{4, 2});
  CHECK(conv.game->quota() == 3);
  CHECK(conv.polarity ==
        std::vector<FeaturePolarity>{FeaturePolarity::complemented,
                                     FeaturePolarity::direct});
  CHECK(conv.scale == 2);
}

TEST_CASE("all-positive integral weights convert at scale one") {
  const LinearThresholdGame model({1.0, 1.0}, -1.5);
  const VotingConversion conv = linear_to_voting(model, 2);
  REQUIRE(conv.game.has_value());
  CHECK(conv.game->weights() == std::vector<std::int64_t>{2, 2});
  CHECK(conv.game->quota() == 3);
  CHECK(conv.polarity ==
        std::vector<FeaturePolarity>{FeaturePolarity::direct,
                                     FeaturePolarity::direct});
}

TEST_CASE("non-integral scaled weights are refused, never rounded") {
  const LinearThresholdGame model({0.3, 1.0}, -0.5);
  CHECK_THROWS_AS(linear_to_voting(model, 2), PrecisionError);
  // the integrality check runs on the decimal string "0.3", so scale 10
  // succeeds even though the double is not exactly 3/10
  const VotingConversion conv = linear_to_voting(model, 10);
  REQUIRE(conv.game.has_value());
  CHECK(conv.game->weights() == std::vector<std::int64_t>{3, 10});
  CHECK(conv.game->quota() == 5);
  CHECK_THROWS_AS(linear_to_voting(model, 0), ArgumentError);
}

TEST_CASE("a non-integral bias is refused with its text in the message") {
  const LinearThresholdGame model({1.0}, 0.25);
  try {
    linear_to_voting(model, 2);
    FAIL("expected a precision error");
  } catch (const PrecisionError& e) {
    const std::string what = e.what();
    CHECK(what.find("0.25") != std::string::npos);
  }
}

TEST_CASE("a non-positive shifted quota means the constant-one game") {
  const LinearThresholdGame model({1.0, 2.0}, 0.0);
  const VotingConversion conv = linear_to_voting(model, 1);
  CHECK(conv.constant_one);
  CHECK_FALSE(conv.game.has_value());
}

TEST_CASE("the converted game agrees with the original through the polarity map") {
  SplitMix64 g(1212);
  for (int rep = 0; rep < 12; ++rep) {
    const int n = 1 + static_cast<int>(g.next_below(8));
    std::vector<double> weights(n);
    for (auto& w : weights)
      w = (static_cast<double>(g.next_below(17)) - 8.0) / 4.0;  // k/4, maybe <0
    const double bias = (static_cast<double>(g.next_below(9)) - 4.0) / 4.0;
    const LinearThresholdGame model(weights, bias);
    const VotingConversion conv = linear_to_voting(model, 4);
    CAPTURE(rep);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const Coalition original{m, n};
      const Outcome expected = model.evaluate(original);
      if (conv.constant_one) {
        CHECK(expected == 1);
      } else {
        CHECK(expected == conv.game->evaluate(conv.map_coalition(original)));
      }
    }
  }
}

TEST_CASE("swing counts carry over from the original to the converted game") {
  // complementing features preserves |F(S with i) - F(S without i)| patterns
  const LinearThresholdGame model({-2.0, 1.0, 1.0}, 0.5);
  const VotingConversion conv = linear_to_voting(model, 2);
  REQUIRE(conv.game.has_value());
  const std::vector<std::uint64_t> original = testing::brute_force_swings(model);
  const ExactResult converted = gf_banzhaf(*conv.game);
  CHECK(converted.swing_counts == original);
  CHECK(exact_banzhaf(model).swing_counts == original);
}

TEST_CASE("decimal strings parse exactly and reject junk") {
  const Decimal d = Decimal::parse("-12.50e-1");
  CHECK(d.mantissa == -1250);
  CHECK(d.exponent == -3);
  CHECK_THROWS_AS(Decimal::parse(""), ParseError);
  CHECK_THROWS_AS(Decimal::parse("1.2.3"), ParseError);
  CHECK_THROWS_AS(Decimal::parse("abc"), ParseError);
  CHECK_THROWS_AS(Decimal::parse("1e"), ParseError);
}

TEST_CASE("scaled_integer accepts exact products only") {
  CHECK(scaled_integer(Decimal::parse("0.5"), 2) == BigInt(1));
  CHECK(scaled_integer(Decimal::parse("-1.25"), 4) == BigInt(-5));
  CHECK(scaled_integer(Decimal::parse("3"), 1) == BigInt(3));
  CHECK(scaled_integer(Decimal::parse("1e2"), 1) == BigInt(100));
  CHECK_FALSE(scaled_integer(Decimal::parse("0.3"), 2).has_value());
  CHECK_FALSE(scaled_integer(Decimal::parse("0.1"), 3).has_value());
}

}  // namespace
}  // namespace banzhaf
