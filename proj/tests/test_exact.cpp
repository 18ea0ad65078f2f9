// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "doctest.h"

#include "banzhaf/errors.hpp"
#include "banzhaf/exact.hpp"
#include "banzhaf/models.hpp"
#include "test_support.hpp"

namespace banzhaf {
namespace {

TEST_CASE("exhaustive swing counts on the three-player voting example") {
  const WeightedVotingGame game({2, 1, 1}, 3);
  const ExactResult r = exact_banzhaf(game);
  REQUIRE(r.n == 3);
  CHECK(r.swing_counts == std::vector<std::uint64_t>{3, 1, 1});
  CHECK(r.indices == std::vector<double>{0.75, 0.25, 0.25});
  CHECK(r.dummies.empty());
  CHECK(r.evaluations == 8);
}

TEST_CASE("a dictator takes all the power and everyone else is a dummy") {
  const WeightedVotingGame game({1, 0, 0}, 1);
  const ExactResult r = exact_banzhaf(game);
  CHECK(r.swing_counts == std::vector<std::uint64_t>{4, 0, 0});
  CHECK(r.indices == std::vector<double>{1.0, 0.0, 0.0});
  CHECK(r.dummies == std::vector<int>{1, 2});
}

TEST_CASE("dictator truth table packs as alternating bits") {
  const WeightedVotingGame game({1, 0}, 1);
  const TruthTableGame table = build_truth_table(game);
  CHECK(table.words() == std::vector<std::uint64_t>{0b1010});
}

TEST_CASE("the constant game has no swings and only dummies") {
  const TruthTableGame zero = TruthTableGame::filled(3, false);
  const ExactResult r = exact_banzhaf(zero);
  CHECK(r.swing_counts == std::vector<std::uint64_t>{0, 0, 0});
  CHECK(r.indices == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(r.dummies == std::vector<int>{0, 1, 2});

  const TruthTableGame one = TruthTableGame::filled(3, true);
  CHECK(exact_banzhaf(one).dummies == std::vector<int>{0, 1, 2});
}

TEST_CASE("swing scans agree with the definition on random truth tables") {
  SplitMix64 g(2026);
  for (int n = 1; n <= 10; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      const TruthTableGame game = testing::random_truth_table(n, g);
      const ExactResult r = exact_banzhaf(game);
      CAPTURE(n);
      CAPTURE(rep);
      CHECK(r.swing_counts == testing::brute_force_swings(game));
    }
  }
}

TEST_CASE("swing scans agree with the definition on random voting games") {
  SplitMix64 g(7);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + static_cast<int>(g.next_below(9));
    const WeightedVotingGame game = testing::random_voting_game(n, 12, g);
    const ExactResult r = exact_banzhaf(game);
    CAPTURE(rep);
    CHECK(r.swing_counts == testing::brute_force_swings(game));
  }
}

TEST_CASE("scanning a pre-built table matches evaluating the game") {
  SplitMix64 g(99);
  const TruthTableGame game = testing::random_truth_table(8, g);
  const ExactResult direct = exact_banzhaf(game);
  const ExactResult via_table = exact_banzhaf_table(build_truth_table(game));
  CHECK(direct.swing_counts == via_table.swing_counts);
  CHECK(direct.indices == via_table.indices);
  CHECK(via_table.evaluations == 0);
}

TEST_CASE("results are identical for any thread count") {
  SplitMix64 g(1234);
  const TruthTableGame game = testing::random_truth_table(11, g);
  ExactOptions one;
  one.threads = 1;
  ExactOptions four;
  four.threads = 4;
  const ExactResult a = exact_banzhaf(game, one);
  const ExactResult b = exact_banzhaf(game, four);
  CHECK(a.swing_counts == b.swing_counts);
  CHECK(a.indices == b.indices);

  const TruthTableGame ta = build_truth_table(game, one);
  const TruthTableGame tb = build_truth_table(game, four);
  CHECK(ta.words() == tb.words());
}

TEST_CASE("enumeration past the cap is refused with a capacity error") {
  const WeightedVotingGame game({1, 1, 1, 1, 1}, 3);
  ExactOptions opts;
  opts.cap = 4;
  CHECK_THROWS_AS(exact_banzhaf(game, opts), CapacityError);
  CHECK_THROWS_AS(build_truth_table(game, opts), CapacityError);
  CHECK_THROWS_AS(find_dummies(game, opts), CapacityError);
  opts.cap = 5;
  CHECK_NOTHROW(exact_banzhaf(game, opts));
}

TEST_CASE("the enumeration cap is configurable through the environment") {
  const int base = default_exact_cap();
  CHECK(base >= 1);
  ::setenv("BANZHAF_EXACT_CAP", "7", 1);
  CHECK(default_exact_cap() == 7);
  ::setenv("BANZHAF_EXACT_CAP", "not a number", 1);
  CHECK(default_exact_cap() == 26);
  ::unsetenv("BANZHAF_EXACT_CAP");
  CHECK(default_exact_cap() == 26);
}

TEST_CASE("find_dummies reports exactly the zero-swing features") {
  SplitMix64 g(5150);
  const TruthTableGame base = testing::random_truth_table(6, g);
  const TruthTableGame wide = testing::with_ignored_feature(base);
  const std::vector<int> dummies = find_dummies(wide);
  // the added top feature is ignored by construction
  bool found = false;
  for (int d : dummies) found = found || d == base.n_features();
  CHECK(found);
  const std::vector<std::uint64_t> swings = testing::brute_force_swings(wide);
  for (int i = 0; i < wide.n_features(); ++i) {
    const bool listed =
        std::find(dummies.begin(), dummies.end(), i) != dummies.end();
    CHECK(listed == (swings[i] == 0));
  }
}

}  // namespace
}  // namespace banzhaf
