// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include "doctest.h"

#include "banzhaf/dataset.hpp"
#include "banzhaf/errors.hpp"
#include "banzhaf/exact.hpp"
#include "banzhaf/sampling.hpp"
#include "test_support.hpp"

namespace banzhaf {
namespace {

TEST_CASE("the Hoeffding sample count is frozen for the standard settings") {
  CHECK(required_samples(0.05, 0.05) == 738);
  CHECK(required_samples(0.01, 0.05) == 18445);
  CHECK(required_samples(0.5, 0.27) == 5);
}

TEST_CASE("sample-count parameters must sit strictly inside (0, 1)") {
  CHECK_THROWS_AS(required_samples(0.0, 0.05), ArgumentError);
  CHECK_THROWS_AS(required_samples(0.05, 0.0), ArgumentError);
  CHECK_THROWS_AS(required_samples(1.0, 0.05), ArgumentError);
  CHECK_THROWS_AS(required_samples(0.05, 1.0), ArgumentError);
  CHECK_THROWS_AS(required_samples(-0.1, 0.05), ArgumentError);
  CHECK_THROWS_AS(required_samples(0.05, -0.1), ArgumentError);
}

TEST_CASE("monte carlo estimates land within epsilon on the voting example") {
  const WeightedVotingGame game({2, 1, 1}, 3);
  const EstimateResult r = monte_carlo_banzhaf(game, 0.05, 0.05, 1);
  REQUIRE(r.indices.size() == 3);
  CHECK(r.k == 738);
  CHECK(r.epsilon == 0.05);
  CHECK(r.delta == 0.05);
  CHECK(r.half_width == 0.05);
  const std::vector<double> truth{0.75, 0.25, 0.25};
  for (int i = 0; i < 3; ++i) {
    CAPTURE(i);
    CHECK(std::abs(r.indices[i] - truth[i]) <= 0.05);
  }
}

TEST_CASE("estimates are reproducible from the seed and differ across seeds") {
  const WeightedVotingGame game({3, 2, 2, 1}, 5);
  const EstimateResult a = monte_carlo_banzhaf_k(game, 500, 42);
  const EstimateResult b = monte_carlo_banzhaf_k(game, 500, 42);
  const EstimateResult c = monte_carlo_banzhaf_k(game, 500, 43);
  CHECK(a.indices == b.indices);
  CHECK(a.indices != c.indices);
  CHECK(a.seed == 42);
  CHECK(a.k == 500);
  CHECK_FALSE(a.epsilon.has_value());
}

TEST_CASE("thread count does not change the sampled estimate") {
  const WeightedVotingGame game({3, 2, 2, 1, 1}, 5);
  const EstimateResult one = monte_carlo_banzhaf_k(game, 1000, 9, 1);
  const EstimateResult four = monte_carlo_banzhaf_k(game, 1000, 9, 4);
  CHECK(one.indices == four.indices);
}

TEST_CASE("estimates converge to the exact index as k grows") {
  const WeightedVotingGame game({2, 1, 1}, 3);
  const std::vector<double> truth = exact_banzhaf(game).indices;
  const EstimateResult r = monte_carlo_banzhaf_k(game, 200000, 7);
  for (int i = 0; i < 3; ++i) {
    CAPTURE(i);
    CHECK(std::abs(r.indices[i] - truth[i]) < 0.01);
  }
}

TEST_CASE("weighted sampling at probability one half matches uniform behavior") {
  const WeightedVotingGame game({2, 1, 1}, 3);
  const ProductDistribution half{{0.5, 0.5, 0.5}};
  const EstimateResult r = weighted_banzhaf(game, half, 20000, 11);
  const std::vector<double> truth{0.75, 0.25, 0.25};
  for (int i = 0; i < 3; ++i) CHECK(std::abs(r.indices[i] - truth[i]) < 0.03);
}

TEST_CASE("weighted sampling concentrated on full coalitions isolates vetoes") {
  // With everyone else always present, a player flips the outcome iff it is
  // critical to the grand coalition. Player 0 is (2+1+1 >= 3 with it, 2 < 3
  // without), the others are not.
  const WeightedVotingGame game({2, 1, 1}, 3);
  const ProductDistribution always{{1.0, 1.0, 1.0}};
  const EstimateResult r = weighted_banzhaf(game, always, 50, 3);
  CHECK(r.indices == std::vector<double>{1.0, 0.0, 0.0});
}

TEST_CASE("degenerate product distributions pin the estimate exactly") {
  // Two-feature conjunction: feature 0 flips the outcome iff feature 1 is
  // present, so an all-absent partner gives exactly 0 and an ever-present
  // partner gives exactly 1, at any sample count.
  const WeightedVotingGame conj({1, 1}, 2);
  const EstimateResult none =
      weighted_banzhaf(conj, ProductDistribution{{0.0, 0.0}}, 40, 5);
  CHECK(none.indices[0] == 0.0);
  const EstimateResult all =
      weighted_banzhaf(conj, ProductDistribution{{1.0, 1.0}}, 40, 5);
  CHECK(all.indices[0] == 1.0);
}

TEST_CASE("weighted sampling validates the distribution") {
  const WeightedVotingGame game({2, 1, 1}, 3);
  CHECK_THROWS_AS(weighted_banzhaf(game, ProductDistribution{{0.5, 0.5}}, 10, 1),
                  ArgumentError);
  CHECK_THROWS_AS(
      weighted_banzhaf(game, ProductDistribution{{0.5, 0.5, 1.5}}, 10, 1),
      ArgumentError);
  CHECK_THROWS_AS(
      weighted_banzhaf(game, ProductDistribution{{0.5, 0.5, -0.1}}, 10, 1),
      ArgumentError);
}

TEST_CASE("empirical index on the two-feature conjunction dataset") {
  // AND over rows {(1,1), (0,1), (0,0)}. Toggling feature 0 flips rows
  // (1,1) and (0,1); toggling feature 1 flips only (1,1).
  const MlpGame conj(2, 1, {1.0, 1.0}, {-1.5}, {1.0}, -0.25);
  Dataset data;
  data.n = 2;
  data.rows = {0b11, 0b10, 0b00};
  data.labels = {1, 0, 0};
  data.feature_names = {"f1", "f2"};
  const std::vector<double> toggled = empirical_banzhaf(conj, data);
  CHECK(toggled[0] == doctest::Approx(2.0 / 3.0));
  CHECK(toggled[1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("literal deltas keep rows as given instead of toggling") {
  const MlpGame conj(2, 1, {1.0, 1.0}, {-1.5}, {1.0}, -0.25);
  Dataset data;
  data.n = 2;
  data.rows = {0b11, 0b10, 0b00};
  data.labels = {1, 0, 0};
  // Rows already containing the feature contribute 0 under the literal
  // definition: only (0,1) gains feature 0 with a flip, and nothing flips
  // for feature 1 since its only absent rows stay losing.
  const std::vector<double> literal = empirical_banzhaf(conj, data, true);
  CHECK(literal[0] == doctest::Approx(1.0 / 3.0));
  CHECK(literal[1] == 0.0);
}

TEST_CASE("a single-row dataset yields indices of exactly zero or one") {
  const WeightedVotingGame game({2, 1, 1}, 3);
  Dataset data;
  data.n = 3;
  data.rows = {0b011};
  data.labels = {1};
  for (double v : empirical_banzhaf(game, data)) CHECK((v == 0.0 || v == 1.0));
}

TEST_CASE("the empirical index over the full domain is the exact index") {
  SplitMix64 g(606);
  for (int n = 1; n <= 8; ++n) {
    const TruthTableGame game = testing::random_truth_table(n, g);
    Dataset all;
    all.n = n;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      all.rows.push_back(m);
      all.labels.push_back(game.bit(m));
    }
    const std::vector<double> empirical = empirical_banzhaf(game, all);
    const std::vector<double> exact = exact_banzhaf(game).indices;
    CAPTURE(n);
    CHECK(empirical == exact);
  }
}

TEST_CASE("empirical evaluation validates width and rejects empty datasets") {
  const WeightedVotingGame game({2, 1, 1}, 3);
  Dataset narrow;
  narrow.n = 2;
  narrow.rows = {0b01};
  narrow.labels = {0};
  CHECK_THROWS_AS(empirical_banzhaf(game, narrow), ArgumentError);
  Dataset empty;
  empty.n = 3;
  CHECK_THROWS_AS(empirical_banzhaf(game, empty), ArgumentError);
}

}  // namespace
}  // namespace banzhaf
