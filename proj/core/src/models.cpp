// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/models.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <system_error>

#include "banzhaf/errors.hpp"

namespace banzhaf {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::truth_table: return "truth_table";
    case ModelKind::voting: return "voting";
    case ModelKind::linear: return "linear";
    case ModelKind::logreg: return "logreg";
    case ModelKind::mlp: return "mlp";
  }
  throw std::logic_error("unreachable model kind");
}

ModelKind model_kind_from_string(std::string_view tag) {
  if (tag == "truth_table") return ModelKind::truth_table;
  if (tag == "voting") return ModelKind::voting;
  if (tag == "linear") return ModelKind::linear;
  if (tag == "logreg") return ModelKind::logreg;
  if (tag == "mlp") return ModelKind::mlp;
  throw ParseError("unknown model type tag \"" + std::string(tag) + "\"");
}

std::string decimal_string(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw ArgumentError("cannot format double");
  return std::string(buf, ptr);
}

TruthTableGame::TruthTableGame(int n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {
  if (n < 1 || n > kMaxFeatures)
    throw ArgumentError("truth table: n must be in [1, 63]");
  if (words_.size() != word_count(n))
    throw ArgumentError("truth table: expected " +
                        std::to_string(word_count(n)) + " words, got " +
                        std::to_string(words_.size()));
  if (n < 6) {
    // Padding beyond 2^n must stay zero; the swing scans rely on it.
    words_[0] &= full_mask(1 << n);
  }
}

TruthTableGame TruthTableGame::filled(int n, bool value) {
  if (n < 1 || n > kMaxFeatures)
    throw ArgumentError("truth table: n must be in [1, 63]");
  std::vector<std::uint64_t> words(word_count(n), 0);
  if (value) {
    const std::uint64_t ones = ~std::uint64_t{0};
    for (auto& w : words) w = ones;
  }
  return TruthTableGame(n, std::move(words));
}

void TruthTableGame::set_bit(std::uint64_t m, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (m & 63u);
  if (value)
    words_[m >> 6] |= bit;
  else
    words_[m >> 6] &= ~bit;
}

WeightedVotingGame::WeightedVotingGame(std::vector<std::int64_t> weights,
                                       std::int64_t quota)
    : weights_(std::move(weights)), quota_(quota), total_weight_(0) {
  if (weights_.empty() || weights_.size() > static_cast<std::size_t>(kMaxFeatures))
    throw ArgumentError("voting game: player count must be in [1, 63]");
  if (quota_ < 1) throw ArgumentError("voting game: quota must be >= 1");
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (weights_[j] < 0)
      throw ArgumentError("voting game: weight " + std::to_string(j) +
                          " is negative");
    total_weight_ += weights_[j];
  }
}

Outcome WeightedVotingGame::evaluate(Coalition s) const {
  std::int64_t sum = 0;
  std::uint64_t m = s.mask;
  while (m) {
    const int j = std::countr_zero(m);
    sum += weights_[j];
    m &= m - 1;
  }
  return sum >= quota_ ? 1 : 0;
}

LinearThresholdGame::LinearThresholdGame(std::vector<double> weights, double bias,
                                         ModelKind kind)
    : weights_(std::move(weights)), bias_(bias), kind_(kind) {
  if (kind_ != ModelKind::linear && kind_ != ModelKind::logreg)
    throw ArgumentError("linear model kind must be linear or logreg");
  if (weights_.empty() || weights_.size() > static_cast<std::size_t>(kMaxFeatures))
    throw ArgumentError("linear model: feature count must be in [1, 63]");
  weight_strings_.reserve(weights_.size());
  for (double w : weights_) {
    if (!std::isfinite(w)) throw ArgumentError("linear model: non-finite weight");
    weight_strings_.push_back(decimal_string(w));
  }
  if (!std::isfinite(bias_)) throw ArgumentError("linear model: non-finite bias");
  bias_string_ = decimal_string(bias_);
}

namespace {
double parse_double(const std::string& s, const char* what) {
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end != begin + s.size() || s.empty())
    throw ParseError(std::string("malformed ") + what + " \"" + s + "\"");
  if (!std::isfinite(v))
    throw ParseError(std::string(what) + " \"" + s + "\" is not finite");
  return v;
}
}  // namespace

LinearThresholdGame::LinearThresholdGame(std::vector<std::string> weight_strings,
                                         std::string bias_string, ModelKind kind)
    : bias_(parse_double(bias_string, "bias")),
      weight_strings_(std::move(weight_strings)),
      bias_string_(std::move(bias_string)),
      kind_(kind) {
  if (kind_ != ModelKind::linear && kind_ != ModelKind::logreg)
    throw ArgumentError("linear model kind must be linear or logreg");
  if (weight_strings_.empty() ||
      weight_strings_.size() > static_cast<std::size_t>(kMaxFeatures))
    throw ArgumentError("linear model: feature count must be in [1, 63]");
  weights_.reserve(weight_strings_.size());
  for (const auto& s : weight_strings_) weights_.push_back(parse_double(s, "weight"));
}

Outcome LinearThresholdGame::evaluate(Coalition s) const {
  double sum = bias_;
  std::uint64_t m = s.mask;
  while (m) {
    const int j = std::countr_zero(m);
    sum += weights_[j];
    m &= m - 1;
  }
  return sum >= 0.0 ? 1 : 0;
}

double LinearThresholdGame::score(std::span<const double> x) const {
  if (x.size() != weights_.size())
    throw ArgumentError("linear model: input length mismatch");
  double sum = bias_;
  for (std::size_t j = 0; j < weights_.size(); ++j) sum += weights_[j] * x[j];
  return sum;
}

MlpGame::MlpGame(int n, int hidden, std::vector<double> w1, std::vector<double> b1,
                 std::vector<double> w2, double b2)
    : n_(n), hidden_(hidden), w1_(std::move(w1)), b1_(std::move(b1)),
      w2_(std::move(w2)), b2_(b2) {
  if (n < 1 || n > kMaxFeatures)
    throw ArgumentError("mlp: feature count must be in [1, 63]");
  if (hidden < 1) throw ArgumentError("mlp: hidden width must be >= 1");
  const auto h = static_cast<std::size_t>(hidden);
  if (w1_.size() != h * static_cast<std::size_t>(n) || b1_.size() != h ||
      w2_.size() != h)
    throw ArgumentError("mlp: inconsistent layer dimensions");
  for (double v : w1_)
    if (!std::isfinite(v)) throw ArgumentError("mlp: non-finite weight");
  for (double v : b1_)
    if (!std::isfinite(v)) throw ArgumentError("mlp: non-finite bias");
  for (double v : w2_)
    if (!std::isfinite(v)) throw ArgumentError("mlp: non-finite weight");
  if (!std::isfinite(b2_)) throw ArgumentError("mlp: non-finite bias");
}

double MlpGame::score_mask(std::uint64_t mask) const {
  double out = b2_;
  for (int h = 0; h < hidden_; ++h) {
    double z = b1_[h];
    const double* row = w1_.data() + static_cast<std::size_t>(h) * n_;
    std::uint64_t m = mask;
    while (m) {
      const int j = std::countr_zero(m);
      z += row[j];
      m &= m - 1;
    }
    if (z > 0.0) out += w2_[h] * z;
  }
  return out;
}

double MlpGame::score(std::span<const double> x) const {
  if (x.size() != static_cast<std::size_t>(n_))
    throw ArgumentError("mlp: input length mismatch");
  double out = b2_;
  for (int h = 0; h < hidden_; ++h) {
    double z = b1_[h];
    const double* row = w1_.data() + static_cast<std::size_t>(h) * n_;
    for (int j = 0; j < n_; ++j) z += row[j] * x[j];
    if (z > 0.0) out += w2_[h] * z;
  }
  return out;
}

Outcome MlpGame::evaluate(Coalition s) const {
  return score_mask(s.mask) >= 0.0 ? 1 : 0;
}

}  // namespace banzhaf
