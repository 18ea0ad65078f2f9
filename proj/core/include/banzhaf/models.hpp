// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "banzhaf/game.hpp"

namespace banzhaf {

// Model classes understood by the model file format. "logreg" evaluates
// exactly like "linear"; the tag is kept so reports can label the model.
enum class ModelKind { truth_table, voting, linear, logreg, mlp };

std::string_view to_string(ModelKind kind);
ModelKind model_kind_from_string(std::string_view tag);  // throws ParseError

// Explicit truth table over all 2^n coalitions, packed 64 coalitions per
// word: bit (m % 64) of words()[m / 64] is F(m). Bits beyond 2^n are zero.
class TruthTableGame final : public Game {
 public:
  TruthTableGame(int n, std::vector<std::uint64_t> words);
  static TruthTableGame filled(int n, bool value);

  static std::size_t word_count(int n) {
    return n < 6 ? 1 : (std::size_t{1} << (n - 6));
  }

  int n_features() const override { return n_; }
  Outcome evaluate(Coalition s) const override { return bit(s.mask); }

  Outcome bit(std::uint64_t m) const {
    return static_cast<Outcome>((words_[m >> 6] >> (m & 63u)) & 1u);
  }
  void set_bit(std::uint64_t m, bool value);

  std::uint64_t table_size() const { return std::uint64_t{1} << n_; }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& mutable_words() { return words_; }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// Weighted voting game with non-negative integer weights: F(S) = 1 iff the
// total weight of S meets the quota. quota > total weight is allowed and
// yields the constant-0 game.
class WeightedVotingGame final : public Game {
 public:
  WeightedVotingGame(std::vector<std::int64_t> weights, std::int64_t quota);

  int n_features() const override { return static_cast<int>(weights_.size()); }
  Outcome evaluate(Coalition s) const override;

  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t quota() const { return quota_; }
  std::int64_t total_weight() const { return total_weight_; }

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t quota_;
  std::int64_t total_weight_;
};

// Linear threshold model: F(x) = 1 iff w.x + bias >= 0 (ties classify as 1).
//
// Weights are carried both as doubles (for evaluation and gradients) and as
// decimal strings (the file representation). The strings are authoritative
// for the exact integrality checks in linear_to_voting; when a game is
// constructed from doubles they are the shortest round-trip decimal forms.
class LinearThresholdGame final : public Game {
 public:
  LinearThresholdGame(std::vector<double> weights, double bias,
                      ModelKind kind = ModelKind::linear);
  LinearThresholdGame(std::vector<std::string> weight_strings,
                      std::string bias_string,
                      ModelKind kind = ModelKind::linear);

  int n_features() const override { return static_cast<int>(weights_.size()); }
  Outcome evaluate(Coalition s) const override;

  double score(std::span<const double> x) const;

  const std::vector<double>& weights() const { return weights_; }
  double bias() const { return bias_; }
  const std::vector<std::string>& weight_strings() const { return weight_strings_; }
  const std::string& bias_string() const { return bias_string_; }
  ModelKind kind() const { return kind_; }

 private:
  std::vector<double> weights_;
  double bias_;
  std::vector<std::string> weight_strings_;
  std::string bias_string_;
  ModelKind kind_;  // linear or logreg
};

// Single-hidden-layer ReLU network thresholded at zero:
//   f(x) = w2 . relu(w1 x + b1) + b2,   F(x) = 1 iff f(x) >= 0.
class MlpGame final : public Game {
 public:
  MlpGame(int n, int hidden, std::vector<double> w1, std::vector<double> b1,
          std::vector<double> w2, double b2);

  int n_features() const override { return n_; }
  Outcome evaluate(Coalition s) const override;

  int hidden() const { return hidden_; }
  // Row-major h x n: w1()[h * n_ + j] is the weight from input j to unit h.
  const std::vector<double>& w1() const { return w1_; }
  const std::vector<double>& b1() const { return b1_; }
  const std::vector<double>& w2() const { return w2_; }
  double b2() const { return b2_; }

  double score(std::span<const double> x) const;
  double score_mask(std::uint64_t mask) const;

 private:
  int n_;
  int hidden_;
  std::vector<double> w1_;
  std::vector<double> b1_;
  std::vector<double> w2_;
  double b2_;
};

// Shortest decimal string that round-trips to the same double.
std::string decimal_string(double value);

}  // namespace banzhaf
