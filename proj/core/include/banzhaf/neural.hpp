// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "banzhaf/dataset.hpp"
#include "banzhaf/models.hpp"

namespace banzhaf {

struct SplitSpec {
  int train_count = 0;
  int test_count = 0;
};

struct TrainConfig {
  ModelKind model_kind = ModelKind::mlp;  // mlp or logreg
  int hidden = 20;                        // MLP only
  int epochs = 300;
  double learning_rate = 0.05;
  double l1_lambda = 0.0;  // logreg only
  int batch_size = 32;     // clamped to the training-set size (full batch)
  std::uint64_t seed = 7;
  std::optional<SplitSpec> split;  // used by train_split
};

TrainConfig train_config_from_json(std::string_view text);
std::string to_json(const TrainConfig& config);

struct TrainMetrics {
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
  double final_loss = 0.0;
  std::vector<double> epoch_losses;  // full-training-set mean loss per epoch
};

struct TrainOutput {
  std::shared_ptr<Game> model;  // MlpGame or LinearThresholdGame (logreg)
  ModelKind kind = ModelKind::mlp;
  TrainMetrics metrics;
};

// Deterministic from-scratch training; same config and data give identical
// model bytes. MLP: mini-batch gradient descent on sigmoid cross-entropy of
// the score, seeded init and shuffling. Logreg: proximal gradient with
// per-step soft-thresholding by learning_rate * l1_lambda on the weights
// (bias unregularized), so small coefficients reach exact zero.
TrainOutput train(const Dataset& train_data, const Dataset& test_data,
                  const TrainConfig& config);

// Seeded uniform shuffle, then a (train_count, test_count) cut. The counts
// must sum to the dataset size.
TrainOutput train_split(const Dataset& all, const TrainConfig& config);

// Proximal operator of t * |.|: shrinks toward zero by min(|v|, t).
double soft_threshold(double v, double t);

// Score and hidden pre-activations (returned for gradient reuse).
struct ForwardResult {
  double score = 0.0;
  std::vector<double> hidden_pre;
};
ForwardResult mlp_forward(const MlpGame& model, std::span<const double> x);

// d f / d x = w1^T (mask . w2) with mask_h = 1 iff hidden_pre_h > 0; the
// ReLU subgradient at exactly 0 is taken as 0.
std::vector<double> input_gradient(const MlpGame& model, std::span<const double> x);

enum class SaliencyNorm { mean, sum };

struct SaliencyResult {
  std::vector<double> scores;  // non-negative
  SaliencyNorm normalization = SaliencyNorm::mean;
  std::size_t dataset_rows = 0;
};

// Aggregated gradient magnitude per input: sum_x |grad_i f(x)|, divided by
// |X| under mean normalization (the default; rankings are unaffected).
// Supports MlpGame and LinearThresholdGame models.
SaliencyResult gradient_saliency(const Game& model, const Dataset& data,
                                 SaliencyNorm norm = SaliencyNorm::mean);

}  // namespace banzhaf
