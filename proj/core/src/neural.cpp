// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/neural.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "json.hpp"

#include "banzhaf/errors.hpp"
#include "banzhaf/rng.hpp"

namespace banzhaf {

namespace {

using nlohmann::ordered_json;

// Stream indices under the configured seed; fixed so reruns are identical.
constexpr std::uint64_t kInitStream = 0;
constexpr std::uint64_t kShuffleStream = 1;
constexpr std::uint64_t kSplitStream = 2;

void validate(const TrainConfig& c) {
  if (c.model_kind != ModelKind::mlp && c.model_kind != ModelKind::logreg)
    throw ArgumentError("training supports mlp and logreg models");
  if (c.model_kind == ModelKind::mlp && c.hidden < 1)
    throw ArgumentError("hidden layer needs at least 1 unit");
  if (c.epochs < 1) throw ArgumentError("epochs must be at least 1");
  if (!(c.learning_rate > 0.0) || !std::isfinite(c.learning_rate))
    throw ArgumentError("learning rate must be positive");
  if (c.l1_lambda < 0.0 || !std::isfinite(c.l1_lambda))
    throw ArgumentError("l1_lambda must be non-negative");
  if (c.model_kind == ModelKind::mlp && c.l1_lambda != 0.0)
    throw ArgumentError("l1_lambda applies to logreg training only");
  if (c.batch_size < 1) throw ArgumentError("batch size must be at least 1");
  if (c.split) {
    if (c.split->train_count < 1 || c.split->test_count < 1)
      throw ArgumentError("split needs at least 1 train row and 1 test row");
  }
}

double sigmoid(double s) {
  return s >= 0.0 ? 1.0 / (1.0 + std::exp(-s))
                  : std::exp(s) / (1.0 + std::exp(s));
}

// Numerically stable -[y ln p + (1-y) ln(1-p)] for p = sigmoid(s).
double cross_entropy(double s, double y) {
  return std::max(s, 0.0) - s * y + std::log1p(std::exp(-std::abs(s)));
}

std::vector<std::size_t> shuffled_indices(std::size_t count, SplitMix64& g) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = count; i > 1; --i)
    std::swap(order[i - 1], order[g.next_below(i)]);
  return order;
}

double uniform_in(SplitMix64& g, double radius) {
  return (2.0 * g.next_unit() - 1.0) * radius;
}

double accuracy(const Game& model, const Dataset& data) {
  std::size_t correct = 0;
  for (std::size_t r = 0; r < data.size(); ++r)
    if (model.evaluate(data.coalition(r)) == data.labels[r]) ++correct;
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

struct MlpParams {
  int n = 0;
  int hidden = 0;
  std::vector<double> w1;  // row-major hidden x n
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0.0;
};

double mlp_score(const MlpParams& p, std::uint64_t mask,
                 std::vector<double>& pre) {
  pre.assign(p.hidden, 0.0);
  double score = p.b2;
  for (int h = 0; h < p.hidden; ++h) {
    double acc = p.b1[h];
    const double* row = p.w1.data() + static_cast<std::size_t>(h) * p.n;
    for (int j = 0; j < p.n; ++j)
      if ((mask >> j) & 1u) acc += row[j];
    pre[h] = acc;
    if (acc > 0.0) score += p.w2[h] * acc;
  }
  return score;
}

double dataset_mean_loss_mlp(const MlpParams& p, const Dataset& data,
                             std::vector<double>& pre) {
  double total = 0.0;
  for (std::size_t r = 0; r < data.size(); ++r)
    total += cross_entropy(mlp_score(p, data.rows[r], pre),
                           data.labels[r]);
  return total / static_cast<double>(data.size());
}

TrainOutput train_mlp(const Dataset& train_data, const Dataset& test_data,
                      const TrainConfig& config) {
  const int n = train_data.n;
  const int hidden = config.hidden;

  MlpParams p;
  p.n = n;
  p.hidden = hidden;
  p.b1.assign(hidden, 0.0);
  p.b2 = 0.0;
  {
    SplitMix64 init = stream_for(config.seed, kInitStream);
    const double r1 = 1.0 / std::sqrt(static_cast<double>(n));
    const double r2 = 1.0 / std::sqrt(static_cast<double>(hidden));
    p.w1.resize(static_cast<std::size_t>(hidden) * n);
    for (auto& w : p.w1) w = uniform_in(init, r1);
    p.w2.resize(hidden);
    for (auto& w : p.w2) w = uniform_in(init, r2);
  }

  const std::size_t rows = train_data.size();
  const std::size_t batch =
      std::min<std::size_t>(config.batch_size, rows);
  SplitMix64 shuffle = stream_for(config.seed, kShuffleStream);

  std::vector<double> pre(hidden);
  std::vector<double> g_w1(p.w1.size());
  std::vector<double> g_b1(hidden);
  std::vector<double> g_w2(hidden);

  TrainMetrics metrics;
  metrics.epoch_losses.reserve(config.epochs);

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const std::vector<std::size_t> order = shuffled_indices(rows, shuffle);
    for (std::size_t begin = 0; begin < rows; begin += batch) {
      const std::size_t end = std::min(begin + batch, rows);
      const double inv = 1.0 / static_cast<double>(end - begin);
      std::fill(g_w1.begin(), g_w1.end(), 0.0);
      std::fill(g_b1.begin(), g_b1.end(), 0.0);
      std::fill(g_w2.begin(), g_w2.end(), 0.0);
      double g_b2 = 0.0;

      for (std::size_t k = begin; k < end; ++k) {
        const std::uint64_t mask = train_data.rows[order[k]];
        const double y = train_data.labels[order[k]];
        const double s = mlp_score(p, mask, pre);
        const double d = sigmoid(s) - y;  // dL/ds
        g_b2 += d;
        for (int h = 0; h < hidden; ++h) {
          if (pre[h] > 0.0) {
            g_w2[h] += d * pre[h];
            const double dh = d * p.w2[h];
            g_b1[h] += dh;
            double* grow = g_w1.data() + static_cast<std::size_t>(h) * n;
            for (int j = 0; j < n; ++j)
              if ((mask >> j) & 1u) grow[j] += dh;
          }
        }
      }

      const double step = config.learning_rate * inv;
      for (std::size_t i = 0; i < p.w1.size(); ++i) p.w1[i] -= step * g_w1[i];
      for (int h = 0; h < hidden; ++h) {
        p.b1[h] -= step * g_b1[h];
        p.w2[h] -= step * g_w2[h];
      }
      p.b2 -= step * g_b2;
    }

    const double loss = dataset_mean_loss_mlp(p, train_data, pre);
    if (!std::isfinite(loss))
      throw TrainingError("training diverged at epoch " +
                          std::to_string(epoch + 1) +
                          "; lower the learning rate");
    metrics.epoch_losses.push_back(loss);
  }

  auto model = std::make_shared<MlpGame>(n, hidden, std::move(p.w1),
                                         std::move(p.b1), std::move(p.w2),
                                         p.b2);
  metrics.final_loss = metrics.epoch_losses.back();
  metrics.train_accuracy = accuracy(*model, train_data);
  metrics.test_accuracy = accuracy(*model, test_data);

  TrainOutput out;
  out.model = std::move(model);
  out.kind = ModelKind::mlp;
  out.metrics = std::move(metrics);
  return out;
}

double logreg_score(std::span<const double> w, double b, std::uint64_t mask,
                    int n) {
  double s = b;
  for (int j = 0; j < n; ++j)
    if ((mask >> j) & 1u) s += w[j];
  return s;
}

double dataset_mean_loss_logreg(std::span<const double> w, double b,
                                const Dataset& data, double lambda) {
  double total = 0.0;
  for (std::size_t r = 0; r < data.size(); ++r)
    total += cross_entropy(logreg_score(w, b, data.rows[r], data.n),
                           data.labels[r]);
  double penalty = 0.0;
  for (double v : w) penalty += std::abs(v);
  return total / static_cast<double>(data.size()) + lambda * penalty;
}

TrainOutput train_logreg(const Dataset& train_data, const Dataset& test_data,
                         const TrainConfig& config) {
  const int n = train_data.n;
  std::vector<double> w(n, 0.0);
  double b = 0.0;

  const std::size_t rows = train_data.size();
  const std::size_t batch =
      std::min<std::size_t>(config.batch_size, rows);
  SplitMix64 shuffle = stream_for(config.seed, kShuffleStream);

  std::vector<double> g_w(n);
  TrainMetrics metrics;
  metrics.epoch_losses.reserve(config.epochs);

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const std::vector<std::size_t> order = shuffled_indices(rows, shuffle);
    for (std::size_t begin = 0; begin < rows; begin += batch) {
      const std::size_t end = std::min(begin + batch, rows);
      const double inv = 1.0 / static_cast<double>(end - begin);
      std::fill(g_w.begin(), g_w.end(), 0.0);
      double g_b = 0.0;

      for (std::size_t k = begin; k < end; ++k) {
        const std::uint64_t mask = train_data.rows[order[k]];
        const double y = train_data.labels[order[k]];
        const double d = sigmoid(logreg_score(w, b, mask, n)) - y;
        g_b += d;
        for (int j = 0; j < n; ++j)
          if ((mask >> j) & 1u) g_w[j] += d;
      }

      const double step = config.learning_rate * inv;
      // Proximal step: plain gradient descent, then soft-threshold the
      // weights so the L1 penalty produces exact zeros. Bias is left alone.
      const double shrink = config.learning_rate * config.l1_lambda;
      for (int j = 0; j < n; ++j)
        w[j] = soft_threshold(w[j] - step * g_w[j], shrink);
      b -= step * g_b;
    }

    const double loss =
        dataset_mean_loss_logreg(w, b, train_data, config.l1_lambda);
    if (!std::isfinite(loss))
      throw TrainingError("training diverged at epoch " +
                          std::to_string(epoch + 1) +
                          "; lower the learning rate");
    metrics.epoch_losses.push_back(loss);
  }

  auto model =
      std::make_shared<LinearThresholdGame>(std::move(w), b, ModelKind::logreg);
  metrics.final_loss = metrics.epoch_losses.back();
  metrics.train_accuracy = accuracy(*model, train_data);
  metrics.test_accuracy = accuracy(*model, test_data);

  TrainOutput out;
  out.model = std::move(model);
  out.kind = ModelKind::logreg;
  out.metrics = std::move(metrics);
  return out;
}

}  // namespace

TrainConfig train_config_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid training config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("training config must be a JSON object");

  TrainConfig c;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "model") {
        c.model_kind = model_kind_from_string(value.get<std::string>());
      } else if (key == "hidden") {
        c.hidden = value.get<int>();
      } else if (key == "epochs") {
        c.epochs = value.get<int>();
      } else if (key == "learning_rate") {
        c.learning_rate = value.get<double>();
      } else if (key == "l1_lambda") {
        c.l1_lambda = value.get<double>();
      } else if (key == "batch_size") {
        c.batch_size = value.get<int>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "split") {
        SplitSpec split;
        split.train_count = value.at("train").get<int>();
        split.test_count = value.at("test").get<int>();
        for (const auto& [skey, svalue] : value.items()) {
          (void)svalue;
          if (skey != "train" && skey != "test")
            throw ParseError("unknown training config key \"split." + skey +
                             "\"");
        }
        c.split = split;
      } else {
        throw ParseError("unknown training config key \"" + key + "\"");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("training config key \"" + key + "\": " + e.what());
    }
  }
  validate(c);
  return c;
}

std::string to_json(const TrainConfig& config) {
  validate(config);
  ordered_json j;
  j["model"] = std::string(to_string(config.model_kind));
  if (config.model_kind == ModelKind::mlp) j["hidden"] = config.hidden;
  j["epochs"] = config.epochs;
  j["learning_rate"] = config.learning_rate;
  if (config.model_kind == ModelKind::logreg)
    j["l1_lambda"] = config.l1_lambda;
  j["batch_size"] = config.batch_size;
  j["seed"] = config.seed;
  if (config.split)
    j["split"] = {{"train", config.split->train_count},
                  {"test", config.split->test_count}};
  return j.dump(2) + "\n";
}

TrainOutput train(const Dataset& train_data, const Dataset& test_data,
                  const TrainConfig& config) {
  validate(config);
  if (train_data.size() == 0) throw ArgumentError("training set is empty");
  if (test_data.size() == 0) throw ArgumentError("test set is empty");
  if (test_data.n != train_data.n)
    throw ArgumentError("train and test sets have different widths");

  return config.model_kind == ModelKind::mlp
             ? train_mlp(train_data, test_data, config)
             : train_logreg(train_data, test_data, config);
}

TrainOutput train_split(const Dataset& all, const TrainConfig& config) {
  validate(config);
  if (!config.split)
    throw ArgumentError("train_split needs a split in the config");
  const std::size_t total = static_cast<std::size_t>(
      config.split->train_count + config.split->test_count);
  if (total != all.size())
    throw ArgumentError("split " + std::to_string(config.split->train_count) +
                        "+" + std::to_string(config.split->test_count) +
                        " does not cover the " + std::to_string(all.size()) +
                        " dataset rows");

  SplitMix64 g = stream_for(config.seed, kSplitStream);
  const std::vector<std::size_t> order = shuffled_indices(all.size(), g);

  Dataset train_data;
  train_data.n = all.n;
  train_data.feature_names = all.feature_names;
  Dataset test_data = train_data;
  for (std::size_t k = 0; k < order.size(); ++k) {
    Dataset& target =
        k < static_cast<std::size_t>(config.split->train_count) ? train_data
                                                                : test_data;
    target.rows.push_back(all.rows[order[k]]);
    target.labels.push_back(all.labels[order[k]]);
  }
  return train(train_data, test_data, config);
}

double soft_threshold(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

ForwardResult mlp_forward(const MlpGame& model, std::span<const double> x) {
  if (static_cast<int>(x.size()) != model.n_features())
    throw ArgumentError("input has " + std::to_string(x.size()) +
                        " values for " + std::to_string(model.n_features()) +
                        " features");
  ForwardResult r;
  const int n = model.n_features();
  const int hidden = model.hidden();
  r.hidden_pre.resize(hidden);
  double score = model.b2();
  for (int h = 0; h < hidden; ++h) {
    double acc = model.b1()[h];
    const double* row = model.w1().data() + static_cast<std::size_t>(h) * n;
    for (int j = 0; j < n; ++j) acc += row[j] * x[j];
    r.hidden_pre[h] = acc;
    if (acc > 0.0) score += model.w2()[h] * acc;
  }
  r.score = score;
  return r;
}

std::vector<double> input_gradient(const MlpGame& model,
                                   std::span<const double> x) {
  const ForwardResult f = mlp_forward(model, x);
  const int n = model.n_features();
  const int hidden = model.hidden();
  std::vector<double> grad(n, 0.0);
  for (int h = 0; h < hidden; ++h) {
    if (f.hidden_pre[h] <= 0.0) continue;  // ReLU subgradient 0 at the kink
    const double wh = model.w2()[h];
    const double* row = model.w1().data() + static_cast<std::size_t>(h) * n;
    for (int j = 0; j < n; ++j) grad[j] += wh * row[j];
  }
  return grad;
}

SaliencyResult gradient_saliency(const Game& model, const Dataset& data,
                                 SaliencyNorm norm) {
  const int n = model.n_features();
  if (data.n != n)
    throw ArgumentError("dataset width " + std::to_string(data.n) +
                        " does not match the model's " + std::to_string(n) +
                        " features");
  if (data.size() == 0) throw ArgumentError("dataset is empty");

  SaliencyResult result;
  result.normalization = norm;
  result.dataset_rows = data.size();

  if (const auto* linear = dynamic_cast<const LinearThresholdGame*>(&model)) {
    // The score gradient is the weight vector at every input, so the mean
    // is |w_i| exactly; no accumulation error to introduce.
    result.scores.resize(n);
    for (int j = 0; j < n; ++j) {
      const double mag = std::abs(linear->weights()[j]);
      result.scores[j] = norm == SaliencyNorm::mean
                             ? mag
                             : mag * static_cast<double>(data.size());
    }
    return result;
  }

  const auto* mlp = dynamic_cast<const MlpGame*>(&model);
  if (!mlp)
    throw ArgumentError(
        "gradient saliency needs a differentiable model (mlp, linear or "
        "logreg)");

  result.scores.assign(n, 0.0);
  std::vector<double> x;
  for (std::size_t r = 0; r < data.size(); ++r) {
    x = data.row_reals(r);
    const std::vector<double> grad = input_gradient(*mlp, x);
    for (int j = 0; j < n; ++j) result.scores[j] += std::abs(grad[j]);
  }
  if (norm == SaliencyNorm::mean)
    for (double& s : result.scores) s /= static_cast<double>(data.size());
  return result;
}

}  // namespace banzhaf
