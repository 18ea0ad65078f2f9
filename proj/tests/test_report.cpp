// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"

#include "banzhaf/errors.hpp"
#include "banzhaf/exact.hpp"
#include "banzhaf/neural.hpp"
#include "banzhaf/rank_stats.hpp"
#include "banzhaf/report.hpp"
#include "test_support.hpp"

namespace banzhaf {
namespace {

PowerReport small_report(const std::string& method, std::vector<double> values,
                         const std::string& hash = "sha256:aa") {
  PowerReport r;
  r.model = {"m.json", "voting", hash};
  r.method = method;
  r.n_features = static_cast<int>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ReportEntry e;
    e.feature_index = static_cast<int>(i);
    e.feature_name = "f" + std::to_string(i + 1);
    e.value = values[i];
    r.entries.push_back(e);
  }
  return r;
}

TEST_CASE("ranks average over ties") {
  const std::vector<double> v{0.75, 0.25, 0.25};
  CHECK(average_ranks(v) == std::vector<double>{3.0, 1.5, 1.5});
  const std::vector<double> u{1.0, 2.0, 3.0, 4.0};
  CHECK(average_ranks(u) == std::vector<double>{1.0, 2.0, 3.0, 4.0});
  const std::vector<double> all_same{2.0, 2.0, 2.0};
  CHECK(average_ranks(all_same) == std::vector<double>{2.0, 2.0, 2.0});
}

TEST_CASE("spearman is one for identical rankings and minus one for reversals") {
  const std::vector<double> a{0.1, 0.4, 0.9};
  const std::vector<double> up{1.0, 2.0, 3.0};
  const std::vector<double> down{3.0, 2.0, 1.0};
  CHECK(spearman(a, up) == doctest::Approx(1.0));
  CHECK(spearman(a, down) == doctest::Approx(-1.0));
  const std::vector<double> flat{5.0, 5.0, 5.0};
  CHECK(spearman(a, flat) == 0.0);
  CHECK(spearman(flat, flat) == 0.0);
}

TEST_CASE("spearman handles the tied voting profile") {
  // ranks (3, 1.5, 1.5) vs (3, 1, 2): r = 0.866...
  const std::vector<double> exact{0.75, 0.25, 0.25};
  const std::vector<double> other{0.9, 0.1, 0.2};
  CHECK(spearman(exact, other) == doctest::Approx(std::sqrt(3.0) / 2.0));
}

TEST_CASE("kendall tau-b matches hand-computed cases") {
  const std::vector<double> a{1.0, 2.0, 3.0, 4.0};
  const std::vector<double> b{1.0, 3.0, 2.0, 4.0};
  // pairs: C = 5, D = 1, no ties -> (5-1)/6
  CHECK(kendall_tau_b(a, b) == doctest::Approx(4.0 / 6.0));
  CHECK(kendall_tau_b(a, a) == doctest::Approx(1.0));
  const std::vector<double> rev{4.0, 3.0, 2.0, 1.0};
  CHECK(kendall_tau_b(a, rev) == doctest::Approx(-1.0));

  // tie in b only: a=(1,2,3), b=(1,1,2): C=2, D=0, ties_b=1
  // tau-b = 2 / sqrt(3 * 2)
  const std::vector<double> ta{1.0, 2.0, 3.0};
  const std::vector<double> tb{1.0, 1.0, 2.0};
  CHECK(kendall_tau_b(ta, tb) == doctest::Approx(2.0 / std::sqrt(6.0)));
  const std::vector<double> flat{1.0, 1.0, 1.0};
  CHECK(kendall_tau_b(ta, flat) == 0.0);
}

TEST_CASE("top-k overlap counts shared leaders with deterministic tie-breaks") {
  const std::vector<double> a{0.9, 0.5, 0.1, 0.7};
  const std::vector<double> b{0.2, 0.8, 0.6, 0.4};
  // top-2(a) = {0, 3}, top-2(b) = {1, 2} -> 0
  CHECK(top_k_overlap(a, b, 2) == 0.0);
  // top-3(a) = {0, 3, 1}, top-3(b) = {1, 2, 3} -> {1, 3} -> 2/3
  CHECK(top_k_overlap(a, b, 3) == doctest::Approx(2.0 / 3.0));
  CHECK(top_k_overlap(a, a, 4) == 1.0);
  // ties broken by index: top-1 of (1,1) is feature 0 for both
  const std::vector<double> t1{1.0, 1.0};
  const std::vector<double> t2{1.0, 1.0};
  CHECK(top_k_overlap(t1, t2, 1) == 1.0);
  CHECK_THROWS_AS(top_k_overlap(a, b, 0), ArgumentError);
  CHECK_THROWS_AS(top_k_overlap(a, b, 5), ArgumentError);
}

TEST_CASE("rank statistics validate their inputs") {
  const std::vector<double> a{1.0, 2.0};
  const std::vector<double> wrong{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(spearman(a, wrong), ArgumentError);
  CHECK_THROWS_AS(kendall_tau_b(a, wrong), ArgumentError);
  CHECK_THROWS_AS(top_k_overlap(a, wrong, 1), ArgumentError);
  const std::vector<double> empty;
  CHECK_THROWS_AS(spearman(empty, empty), ArgumentError);
}

TEST_CASE("power reports round-trip through canonical json") {
  PowerReport r = small_report("exact", {0.75, 0.25, 0.25});
  r.entries[0].swing_count = 3;
  r.entries[1].swing_count = 1;
  r.entries[2].swing_count = 1;
  r.runtime_ms = 12.5;
  const std::string text = to_json(r);
  const PowerReport back = power_report_from_json(text);
  CHECK(back.spec_version == kSpecVersion);
  CHECK(back.method == "exact");
  CHECK(back.n_features == 3);
  REQUIRE(back.entries.size() == 3);
  CHECK(back.entries[0].value == 0.75);
  CHECK(back.entries[0].swing_count == 3);
  CHECK(back.entries[0].feature_name == "f1");
  CHECK(back.runtime_ms == 12.5);
  CHECK(to_json(back) == text);
}

TEST_CASE("sampling parameters survive the round trip") {
  PowerReport r = small_report("monte_carlo", {0.7, 0.3});
  r.params.epsilon = 0.05;
  r.params.delta = 0.05;
  r.params.k = 738;
  r.params.seed = 1;
  r.params.rng = "splitmix64";
  r.entries[0].ci_half_width = 0.05;
  r.entries[1].ci_half_width = 0.05;
  const PowerReport back = power_report_from_json(to_json(r));
  CHECK(back.params.epsilon == 0.05);
  CHECK(back.params.delta == 0.05);
  CHECK(back.params.k == 738);
  CHECK(back.params.seed == 1);
  CHECK(back.params.rng == "splitmix64");
  CHECK(back.entries[0].ci_half_width == 0.05);
}

TEST_CASE("report validation rejects schema violations") {
  const PowerReport good = small_report("exact", {0.5, 0.5});
  const std::string text = to_json(good);

  auto mutate = [&](const std::string& from, const std::string& to) {
    std::string broken = text;
    const auto pos = broken.find(from);
    REQUIRE(pos != std::string::npos);
    broken.replace(pos, from.size(), to);
    return broken;
  };

  CHECK_THROWS_AS(power_report_from_json(mutate("\"exact\"", "\"psychic\"")),
                  ParseError);
  CHECK_THROWS_AS(power_report_from_json(mutate("\"n_features\": 2", "\"n_features\": 3")),
                  ParseError);
  CHECK_THROWS_AS(
      power_report_from_json(mutate("\"feature_index\": 1", "\"feature_index\": 0")),
      ParseError);
  CHECK_THROWS_AS(power_report_from_json(mutate("\"spec_version\": \"1.0.0\"",
                                                "\"spec_version\": \"2.0.0\"")),
                  ParseError);
  // minor version drift within the same major is accepted
  CHECK_NOTHROW(power_report_from_json(
      mutate("\"spec_version\": \"1.0.0\"", "\"spec_version\": \"1.9.3\"")));
  CHECK_THROWS_AS(
      power_report_from_json(mutate("\"runtime_ms\":", "\"runtime_msx\":")),
      ParseError);
  CHECK_THROWS_AS(power_report_from_json("{}"), ParseError);
}

TEST_CASE("comparison of a report against itself is perfect agreement") {
  const PowerReport r = small_report("exact", {0.75, 0.25, 0.25});
  PowerReport s = small_report("saliency", {0.9, 0.3, 0.2});
  const ComparisonReport c = compare({r, s}, 2);
  REQUIRE(c.methods == std::vector<std::string>{"exact", "saliency"});
  CHECK(c.spearman[0][0] == 1.0);
  CHECK(c.kendall[1][1] == 1.0);
  CHECK(c.top_k_overlap[0][0] == 1.0);
  CHECK(c.spearman[0][1] == c.spearman[1][0]);
  CHECK(c.kendall[0][1] == c.kendall[1][0]);
  CHECK(c.top_k == 2);
  CHECK(c.values.size() == 3);
  CHECK(c.values[0] == std::vector<double>{0.75, 0.9});
  CHECK(c.feature_names == std::vector<std::string>{"f1", "f2", "f3"});
}

TEST_CASE("reversed rankings compare at minus one") {
  const PowerReport a = small_report("exact", {0.9, 0.5, 0.1});
  const PowerReport b = small_report("saliency", {0.1, 0.5, 0.9});
  const ComparisonReport c = compare({a, b}, 1);
  CHECK(c.spearman[0][1] == doctest::Approx(-1.0));
  CHECK(c.kendall[0][1] == doctest::Approx(-1.0));
  CHECK(c.top_k_overlap[0][1] == 0.0);
}

TEST_CASE("a weight hierarchy with matching power ranks correlates perfectly") {
  // (3,2,1,1,1) at quota 4 has swings (11,5,3,3,3): power strictly follows
  // weight where weights differ and ties where they tie, so both rank
  // statistics are exactly 1 against |w|.
  const WeightedVotingGame game({3, 2, 1, 1, 1}, 4);
  const std::vector<double> exact = testing::brute_force_indices(game);
  const ExactResult engine = exact_banzhaf(game);
  CHECK(engine.indices == exact);
  CHECK(engine.swing_counts ==
        std::vector<std::uint64_t>{11, 5, 3, 3, 3});
  const std::vector<double> weights{3.0, 2.0, 1.0, 1.0, 1.0};
  CHECK(spearman(exact, weights) == doctest::Approx(1.0));
  CHECK(kendall_tau_b(exact, weights) == doctest::Approx(1.0));
  CHECK(top_k_overlap(exact, weights, 5) == 1.0);
}

TEST_CASE("weight order need not equal power order") {
  // (3,2,2,2,2) at quota 6: every player swings exactly 6 coalitions, so the
  // power vector is flat even though the weights are not. Correlating actual
  // values (not weight ranks) must expose the divergence.
  const WeightedVotingGame game({3, 2, 2, 2, 2}, 6);
  const std::vector<double> exact = testing::brute_force_indices(game);
  for (double v : exact) CHECK(v == exact[0]);
  CHECK(exact_banzhaf(game).indices == exact);
  const std::vector<double> weights{3.0, 2.0, 2.0, 2.0, 2.0};
  // a constant ranking carries no order information; the convention is 0
  CHECK(spearman(exact, weights) == 0.0);
  CHECK(kendall_tau_b(exact, weights) == 0.0);
}

TEST_CASE("comparisons refuse mismatched models unless asked not to") {
  const PowerReport a = small_report("exact", {0.5, 0.5}, "sha256:aa");
  const PowerReport b = small_report("saliency", {0.6, 0.4}, "sha256:bb");
  CHECK_THROWS_WITH_AS(compare({a, b}, 1),
                       doctest::Contains("allow_model_mismatch"), ArgumentError);
  const ComparisonReport c = compare({a, b}, 1, true);
  CHECK(c.model_hashes == std::vector<std::string>{"sha256:aa", "sha256:bb"});
}

TEST_CASE("comparisons validate shape agreement and top-k range") {
  const PowerReport a = small_report("exact", {0.5, 0.5});
  const PowerReport narrow = small_report("saliency", {0.5});
  CHECK_THROWS_AS(compare({a}, 1), ArgumentError);
  CHECK_THROWS_AS(compare({a, narrow}, 1), ArgumentError);
  CHECK_THROWS_AS(compare({a, a}, 0), ArgumentError);
  CHECK_THROWS_AS(compare({a, a}, 3), ArgumentError);

  PowerReport renamed = small_report("empirical", {0.5, 0.5});
  renamed.entries[1].feature_name = "other";
  CHECK_THROWS_AS(compare({a, renamed}, 1), ArgumentError);
}

TEST_CASE("comparison reports serialize with all three matrices") {
  const PowerReport a = small_report("exact", {0.75, 0.25});
  const PowerReport b = small_report("saliency", {0.8, 0.1});
  const std::string text = to_json(compare({a, b}, 1));
  CHECK(text.find("\"spearman\"") != std::string::npos);
  CHECK(text.find("\"kendall\"") != std::string::npos);
  CHECK(text.find("\"top_k_overlap\"") != std::string::npos);
  CHECK(text.find("\"feature_names\"") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("plot data lists feature-major method-minor rows") {
  const PowerReport a = small_report("exact", {0.75, 0.25});
  const PowerReport b = small_report("saliency", {0.5, 0.125});
  const std::string csv = plot_data_csv({a, b});
  CHECK(csv ==
        "feature,method,value\n"
        "f1,exact,0.75\n"
        "f1,saliency,0.5\n"
        "f2,exact,0.25\n"
        "f2,saliency,0.125\n");
  CHECK_THROWS_AS(plot_data_csv({}), ArgumentError);
}

TEST_CASE("the svg plot is a self-contained document with one bar per value") {
  const PowerReport a = small_report("exact", {0.75, 0.25, 0.5});
  const PowerReport b = small_report("saliency", {0.9, 0.3, 0.1});
  const std::string svg = plot_svg({a, b});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t bars = 0;
  for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
       pos = svg.find("<rect", pos + 1))
    ++bars;
  CHECK(bars >= 6);  // 2 methods x 3 features, background rects allowed
  CHECK(svg.find("f2") != std::string::npos);
  CHECK(svg.find("exact") != std::string::npos);
}

TEST_CASE("certificates round-trip through json") {
  PruneCertificate cert;
  cert.pruned = {1, 3};
  cert.kept = {0, 2};
  cert.model_hash = "sha256:cc";
  cert.verification.mode = "sampled";
  cert.verification.checks = 512;
  cert.verification.mismatches = 0;
  cert.verification.seed = 99;
  const std::string text = certificate_to_json(cert);
  const PruneCertificate back = certificate_from_json(text);
  CHECK(back.pruned == cert.pruned);
  CHECK(back.kept == cert.kept);
  CHECK(back.model_hash == cert.model_hash);
  CHECK(back.verification.mode == "sampled");
  CHECK(back.verification.checks == 512);
  CHECK(back.verification.mismatches == 0);
  REQUIRE(back.verification.seed.has_value());
  CHECK(*back.verification.seed == 99);
  CHECK(certificate_to_json(back) == text);

  CHECK_THROWS_AS(certificate_from_json("{}"), ParseError);
  CHECK_THROWS_AS(certificate_from_json(
                      R"({"spec_version":"1.0.0","pruned":[],"kept":[0],
                          "verification":{"mode":"psychic","checks":1,
                          "mismatches":0},"model_hash":""})"),
                  ParseError);
}

}  // namespace
}  // namespace banzhaf
