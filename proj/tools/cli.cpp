// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "banzhaf/convert.hpp"
#include "banzhaf/dataset.hpp"
#include "banzhaf/errors.hpp"
#include "banzhaf/exact.hpp"
#include "banzhaf/model_io.hpp"
#include "banzhaf/neural.hpp"
#include "banzhaf/pruning.hpp"
#include "banzhaf/report.hpp"
#include "banzhaf/rng.hpp"
#include "banzhaf/sampling.hpp"
#include "banzhaf/voting_gf.hpp"
#include "fetch.hpp"

namespace banzhaf::cli {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// "-" selects the command's primary output stream.
void write_output(const std::string& target, const std::string& text,
                  std::ostream& out) {
  if (target == "-") {
    out << text;
    return;
  }
  std::ofstream file(target, std::ios::binary);
  if (!file) throw ArgumentError("cannot write " + target);
  file << text;
  if (!file) throw ArgumentError("failed writing " + target);
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("f" + std::to_string(i));
  return names;
}

ModelRef model_ref(const LoadedModel& model) {
  return ModelRef{model.path, std::string(to_string(model.kind)), model.hash};
}

PowerReport make_report(ModelRef ref, std::string method,
                        const std::vector<std::string>& names,
                        const std::vector<double>& values,
                        const std::vector<std::uint64_t>* swing_counts,
                        std::optional<double> ci_half_width,
                        ReportParams params, double runtime_ms) {
  PowerReport report;
  report.model = std::move(ref);
  report.method = std::move(method);
  report.n_features = static_cast<int>(values.size());
  report.entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ReportEntry entry;
    entry.feature_index = static_cast<int>(i);
    entry.feature_name = names[i];
    entry.value = values[i];
    if (swing_counts) entry.swing_count = (*swing_counts)[i];
    if (ci_half_width) entry.ci_half_width = *ci_half_width;
    report.entries.push_back(std::move(entry));
  }
  report.params = std::move(params);
  report.runtime_ms = runtime_ms;
  return report;
}

ProductDistribution load_distribution(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": invalid JSON: " + e.what());
  }
  const nlohmann::json* array = nullptr;
  if (j.is_array()) {
    array = &j;
  } else if (j.is_object() && j.contains("probs") && j.at("probs").is_array()) {
    array = &j.at("probs");
  } else {
    throw ParseError(path.string() +
                     ": expected an array of probabilities or {\"probs\": [...]}");
  }
  ProductDistribution dist;
  dist.probs.reserve(array->size());
  for (const auto& v : *array) {
    if (!v.is_number())
      throw ParseError(path.string() + ": probabilities must be numbers");
    dist.probs.push_back(v.get<double>());
  }
  return dist;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string metrics_json(const TrainMetrics& metrics) {
  nlohmann::ordered_json j;
  j["train_accuracy"] = metrics.train_accuracy;
  j["test_accuracy"] = metrics.test_accuracy;
  j["final_loss"] = metrics.final_loss;
  j["epochs"] = metrics.epoch_losses.size();
  j["epoch_losses"] = metrics.epoch_losses;
  return j.dump(2) + "\n";
}

// Shared option bundles.

struct OutOpt {
  std::string path = "-";
  void attach(CLI::App* cmd, const char* what = "report") {
    cmd->add_option("--out", path,
                    std::string("Output file for the ") + what +
                        " (\"-\" = stdout)");
  }
};

struct ExactOpts {
  int threads = 0;
  int cap = 0;
  void attach(CLI::App* cmd) {
    cmd->add_option("--threads", threads,
                    "Worker threads (0 = hardware concurrency)");
    cmd->add_option("--exact-cap", cap,
                    "Max feature count for exhaustive enumeration "
                    "(0 = BANZHAF_EXACT_CAP or 26)");
  }
  ExactOptions options() const { return ExactOptions{cap, threads}; }
};

struct SampleOpts {
  double epsilon = 0.05;
  double delta = 0.05;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  int threads = 0;
  void attach(CLI::App* cmd) {
    cmd->add_option("--epsilon", epsilon,
                    "Per-feature additive error bound (default 0.05)");
    cmd->add_option("--delta", delta,
                    "Per-feature failure probability (default 0.05)");
    cmd->add_option("--samples", samples,
                    "Explicit sample count per feature (overrides "
                    "--epsilon/--delta)");
    cmd->add_option("--seed", seed, "Random seed (default 1)");
    cmd->add_option("--threads", threads,
                    "Worker threads (0 = hardware concurrency)");
  }
};

// Model files carry no feature names, so model-only reports default to
// f1..fn. --names-from borrows the names of the dataset the model was
// trained on, letting those reports join comparisons against data-bound
// reports (saliency, empirical, l1 coefficients) that carry real names.
struct NamesOpt {
  std::string csv;
  void attach(CLI::App* cmd) {
    cmd->add_option("--names-from", csv,
                    "CSV whose feature names label the report entries");
  }
  std::vector<std::string> names_for(int n) const {
    if (csv.empty()) return default_names(n);
    const Dataset data = load_csv(csv);
    if (data.n != n)
      throw ArgumentError("--names-from " + csv + " has " +
                          std::to_string(data.n) + " features but the model " +
                          "has " + std::to_string(n));
    return data.feature_names;
  }
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Banzhaf power indices for binary classifiers"};
  app.name("banzhaf");
  app.require_subcommand(1);

  // ---- exact ----------------------------------------------------------
  auto* exact_cmd = app.add_subcommand(
      "exact", "Exact Banzhaf indices by exhaustive enumeration");
  std::string exact_model;
  exact_cmd->add_option("--model", exact_model, "Model JSON file")->required();
  OutOpt exact_out;
  exact_out.attach(exact_cmd);
  ExactOpts exact_opts;
  exact_opts.attach(exact_cmd);
  NamesOpt exact_names;
  exact_names.attach(exact_cmd);
  exact_cmd->callback([&] {
    const LoadedModel model = load_model(exact_model);
    const ExactResult result = exact_banzhaf(*model.game, exact_opts.options());
    const PowerReport report = make_report(
        model_ref(model), "exact", exact_names.names_for(result.n),
        result.indices, &result.swing_counts, std::nullopt, {},
        result.runtime_ms);
    write_output(exact_out.path, to_json(report), out);
  });

  // ---- gf -------------------------------------------------------------
  auto* gf_cmd = app.add_subcommand(
      "gf", "Exact Banzhaf indices for voting models (generating functions)");
  std::string gf_model;
  gf_cmd->add_option("--model", gf_model, "Voting model JSON file")->required();
  OutOpt gf_out;
  gf_out.attach(gf_cmd);
  std::int64_t gf_max_weight = GfOptions{}.max_total_weight;
  gf_cmd->add_option("--max-total-weight", gf_max_weight,
                     "Capacity cap on the total weight");
  int gf_threads = 0;
  gf_cmd->add_option("--threads", gf_threads,
                     "Worker threads (0 = hardware concurrency)");
  NamesOpt gf_names;
  gf_names.attach(gf_cmd);
  gf_cmd->callback([&] {
    const LoadedModel model = load_model(gf_model);
    const auto* voting = dynamic_cast<const WeightedVotingGame*>(model.game.get());
    if (!voting)
      throw ArgumentError(
          "the generating-function method requires a voting model; `banzhaf "
          "convert` rewrites an integral linear model as one");
    const ExactResult result =
        gf_banzhaf(*voting, GfOptions{gf_max_weight, gf_threads});
    const PowerReport report = make_report(
        model_ref(model), "generating_function", gf_names.names_for(result.n),
        result.indices, &result.swing_counts, std::nullopt, {},
        result.runtime_ms);
    write_output(gf_out.path, to_json(report), out);
  });

  // ---- mc -------------------------------------------------------------
  auto* mc_cmd = app.add_subcommand(
      "mc", "Monte Carlo Banzhaf estimate with per-feature Hoeffding bounds");
  std::string mc_model;
  mc_cmd->add_option("--model", mc_model, "Model JSON file")->required();
  OutOpt mc_out;
  mc_out.attach(mc_cmd);
  SampleOpts mc_opts;
  mc_opts.attach(mc_cmd);
  NamesOpt mc_names;
  mc_names.attach(mc_cmd);
  mc_cmd->callback([&] {
    const LoadedModel model = load_model(mc_model);
    ReportParams params;
    params.seed = mc_opts.seed;
    params.rng = kRngName;
    EstimateResult result;
    std::optional<double> half_width;
    if (mc_opts.samples > 0) {
      result = monte_carlo_banzhaf_k(*model.game, mc_opts.samples,
                                     mc_opts.seed, mc_opts.threads);
    } else {
      result = monte_carlo_banzhaf(*model.game, mc_opts.epsilon, mc_opts.delta,
                                   mc_opts.seed, mc_opts.threads);
      params.epsilon = mc_opts.epsilon;
      params.delta = mc_opts.delta;
      half_width = mc_opts.epsilon;
    }
    params.k = result.k;
    const PowerReport report = make_report(
        model_ref(model), "monte_carlo",
        mc_names.names_for(static_cast<int>(result.indices.size())),
        result.indices, nullptr, half_width, params, result.runtime_ms);
    write_output(mc_out.path, to_json(report), out);
  });

  // ---- weighted -------------------------------------------------------
  auto* weighted_cmd = app.add_subcommand(
      "weighted",
      "Monte Carlo Banzhaf estimate under a product coalition distribution");
  std::string weighted_model, weighted_dist;
  weighted_cmd->add_option("--model", weighted_model, "Model JSON file")
      ->required();
  weighted_cmd
      ->add_option("--dist", weighted_dist,
                   "JSON file with per-feature presence probabilities")
      ->required();
  OutOpt weighted_out;
  weighted_out.attach(weighted_cmd);
  SampleOpts weighted_opts;
  weighted_opts.attach(weighted_cmd);
  NamesOpt weighted_names;
  weighted_names.attach(weighted_cmd);
  weighted_cmd->callback([&] {
    const LoadedModel model = load_model(weighted_model);
    const ProductDistribution dist = load_distribution(weighted_dist);
    ReportParams params;
    params.seed = weighted_opts.seed;
    params.rng = kRngName;
    std::optional<double> half_width;
    std::uint64_t k = weighted_opts.samples;
    if (k == 0) {
      k = required_samples(weighted_opts.epsilon, weighted_opts.delta);
      params.epsilon = weighted_opts.epsilon;
      params.delta = weighted_opts.delta;
      half_width = weighted_opts.epsilon;
    }
    const EstimateResult result = weighted_banzhaf(
        *model.game, dist, k, weighted_opts.seed, weighted_opts.threads);
    params.k = result.k;
    const PowerReport report = make_report(
        model_ref(model), "weighted_mc",
        weighted_names.names_for(static_cast<int>(result.indices.size())),
        result.indices, nullptr, half_width, params, result.runtime_ms);
    write_output(weighted_out.path, to_json(report), out);
  });

  // ---- empirical ------------------------------------------------------
  auto* empirical_cmd = app.add_subcommand(
      "empirical", "Empirical Banzhaf index (per-row toggle flip rate)");
  std::string empirical_model, empirical_data;
  empirical_cmd->add_option("--model", empirical_model, "Model JSON file")
      ->required();
  empirical_cmd
      ->add_option("--data", empirical_data, "Dataset CSV (label column first)")
      ->required();
  bool literal_delta = false;
  empirical_cmd->add_flag(
      "--literal-delta", literal_delta,
      "Score rows as-is (rows already containing the feature contribute 0) "
      "instead of toggling");
  OutOpt empirical_out;
  empirical_out.attach(empirical_cmd);
  empirical_cmd->callback([&] {
    const LoadedModel model = load_model(empirical_model);
    const Dataset data = load_csv(empirical_data);
    const auto start = std::chrono::steady_clock::now();
    const std::vector<double> values =
        empirical_banzhaf(*model.game, data, literal_delta);
    ReportParams params;
    params.normalization = literal_delta ? "literal_mean" : "toggle_mean";
    const PowerReport report =
        make_report(model_ref(model), "empirical", data.feature_names, values,
                    nullptr, std::nullopt, params, elapsed_ms(start));
    write_output(empirical_out.path, to_json(report), out);
  });

  // ---- prune ----------------------------------------------------------
  auto* prune_cmd = app.add_subcommand(
      "prune", "Remove dummy features and verify the pruning is lossless");
  std::string prune_model;
  prune_cmd->add_option("--model", prune_model, "Model JSON file")->required();
  std::string verify_mode = "exhaustive";
  prune_cmd
      ->add_option("--verify", verify_mode,
                   "Verification mode: exhaustive (proof) or sampled (evidence)")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  std::uint64_t prune_samples = 10000;
  prune_cmd->add_option("--samples", prune_samples,
                        "Masks to check in sampled mode (default 10000)");
  std::uint64_t prune_seed = 1;
  prune_cmd->add_option("--seed", prune_seed, "Seed for sampled mode");
  std::vector<int> prune_features_list;
  prune_cmd
      ->add_option("--features", prune_features_list,
                   "Prune these feature indices instead of detected dummies "
                   "(lossless only if they are dummies; verification will "
                   "say)")
      ->delimiter(',');
  OutOpt prune_out;
  prune_out.attach(prune_cmd, "certificate");
  std::string prune_model_out;
  prune_cmd->add_option("--model-out", prune_model_out,
                        "Write the reduced model here (voting/linear/logreg "
                        "weight drop, truth tables re-tabulated)");
  ExactOpts prune_opts;
  prune_opts.attach(prune_cmd);
  prune_cmd->callback([&] {
    const LoadedModel model = load_model(prune_model);
    std::shared_ptr<PrunedGame> pruned;
    PruneCertificate cert;
    if (!prune_features_list.empty()) {
      pruned = prune_features(model.game, prune_features_list);
      cert.pruned = pruned->dropped();
      cert.kept = pruned->kept();
      cert.model_hash = model.hash;
    } else {
      auto [game, certificate] =
          prune_dummies(model.game, prune_opts.options(), model.hash);
      pruned = std::move(game);
      cert = std::move(certificate);
    }

    cert.verification =
        verify_mode == "exhaustive"
            ? verify_lossless_exhaustive(*model.game, *pruned,
                                         prune_opts.options())
            : verify_lossless_sampled(*model.game, *pruned, prune_samples,
                                      prune_seed);
    err << "pruned " << cert.pruned.size() << " of "
        << model.game->n_features() << " features; " << cert.verification.mode
        << " verification: " << cert.verification.mismatches
        << " mismatches in " << cert.verification.checks << " checks\n";

    if (!prune_model_out.empty()) {
      std::shared_ptr<const Game> reduced;
      if (const auto* voting =
              dynamic_cast<const WeightedVotingGame*>(model.game.get())) {
        reduced = std::make_shared<WeightedVotingGame>(
            shrink_model(*voting, cert.pruned));
      } else if (const auto* linear = dynamic_cast<const LinearThresholdGame*>(
                     model.game.get())) {
        reduced = std::make_shared<LinearThresholdGame>(
            shrink_model(*linear, cert.pruned));
      } else if (dynamic_cast<const TruthTableGame*>(model.game.get())) {
        reduced = std::make_shared<TruthTableGame>(
            build_truth_table(*pruned, prune_opts.options()));
      } else {
        throw ArgumentError(
            "mlp models have no exact reduced file form; apply the "
            "certificate's kept list to the original model instead");
      }
      save_model(*reduced, prune_model_out);
      err << "reduced model written to " << prune_model_out << "\n";
    }

    write_output(prune_out.path, certificate_to_json(cert), out);
  });

  // ---- convert --------------------------------------------------------
  auto* convert_cmd = app.add_subcommand(
      "convert",
      "Rewrite an integral linear model as a weighted voting game");
  std::string convert_model;
  convert_cmd->add_option("--model", convert_model, "Linear model JSON file")
      ->required();
  std::uint64_t convert_scale = 1;
  convert_cmd->add_option(
      "--scale", convert_scale,
      "Multiplier making every weight and the bias integral (default 1)");
  OutOpt convert_out;
  convert_out.attach(convert_cmd, "conversion record");
  std::string voting_out;
  convert_cmd->add_option("--voting-out", voting_out,
                          "Also write the voting model alone to this file");
  convert_cmd->callback([&] {
    const LoadedModel model = load_model(convert_model);
    const auto* linear =
        dynamic_cast<const LinearThresholdGame*>(model.game.get());
    if (!linear)
      throw ArgumentError("convert expects a linear or logreg model");
    const VotingConversion conversion = linear_to_voting(*linear, convert_scale);
    if (conversion.constant_one)
      err << "note: the shifted quota is non-positive; every coalition wins "
             "and all features are dummies\n";
    if (!voting_out.empty()) {
      if (!conversion.game)
        throw ArgumentError(
            "conversion yields the constant-1 game; there is no voting model "
            "to write");
      save_model(*conversion.game, voting_out);
      err << "voting model written to " << voting_out
          << " (swing counts are invariant under the polarity map)\n";
    }
    write_output(convert_out.path, conversion_to_json(conversion), out);
  });

  // ---- train ----------------------------------------------------------
  auto* train_cmd = app.add_subcommand(
      "train", "Train an MLP or L1 logistic regression on a binary CSV");
  std::string train_kind;
  train_cmd->add_option("kind", train_kind, "Model kind: mlp or logreg")
      ->required()
      ->check(CLI::IsMember({"mlp", "logreg"}));
  std::vector<std::string> train_csvs;
  train_cmd
      ->add_option("--train-csv", train_csvs,
                   "Training CSV (repeat to concatenate files)")
      ->required();
  std::string test_csv;
  train_cmd->add_option("--test-csv", test_csv,
                        "Held-out test CSV (otherwise the config's split "
                        "cuts the training data)");
  std::string config_path;
  train_cmd->add_option("--config", config_path, "Training config JSON");
  OutOpt train_out;
  train_out.attach(train_cmd, "model");
  std::string metrics_out;
  train_cmd->add_option("--metrics-out", metrics_out,
                        "Write accuracy/loss metrics JSON here");
  std::string coeff_report_out;
  train_cmd->add_option("--coeff-report", coeff_report_out,
                        "Write an |coefficient| PowerReport here (logreg "
                        "only)");
  train_cmd->callback([&] {
    TrainConfig config;
    bool config_names_kind = false;
    if (!config_path.empty()) {
      const std::string text = read_file(config_path);
      config = train_config_from_json(text);
      config_names_kind = nlohmann::json::parse(text).contains("model");
    }
    const ModelKind kind = model_kind_from_string(train_kind);
    if (config_names_kind && config.model_kind != kind)
      throw ArgumentError("config trains a " +
                          std::string(to_string(config.model_kind)) +
                          " but the command line says " + train_kind);
    config.model_kind = kind;
    if (kind != ModelKind::logreg && !coeff_report_out.empty())
      throw ArgumentError("--coeff-report applies to logreg training only");

    Dataset data = load_csv(train_csvs.front());
    for (std::size_t i = 1; i < train_csvs.size(); ++i)
      data.append(load_csv(train_csvs[i]));

    const auto start = std::chrono::steady_clock::now();
    TrainOutput trained;
    if (!test_csv.empty()) {
      if (config.split)
        err << "note: explicit --test-csv given; the config's split is "
               "ignored\n";
      config.split.reset();
      trained = train(data, load_csv(test_csv), config);
    } else {
      if (!config.split)
        throw ArgumentError(
            "no test set: pass --test-csv or put a split in the config");
      trained = train_split(data, config);
    }
    const double runtime = elapsed_ms(start);

    err << "train accuracy " << trained.metrics.train_accuracy
        << ", test accuracy " << trained.metrics.test_accuracy
        << ", final loss " << trained.metrics.final_loss << "\n";
    write_output(train_out.path, model_to_json(*trained.model), out);
    if (!metrics_out.empty())
      write_output(metrics_out, metrics_json(trained.metrics), out);
    if (!coeff_report_out.empty()) {
      const auto* linear =
          dynamic_cast<const LinearThresholdGame*>(trained.model.get());
      std::vector<double> magnitudes;
      magnitudes.reserve(linear->weights().size());
      for (double w : linear->weights()) magnitudes.push_back(std::abs(w));
      ReportParams params;
      params.normalization = "absolute";
      const PowerReport report = make_report(
          ModelRef{train_out.path, "logreg", model_hash(*trained.model)},
          "l1_coefficients", data.feature_names, magnitudes, nullptr,
          std::nullopt, params, runtime);
      write_output(coeff_report_out, to_json(report), out);
    }
  });

  // ---- saliency -------------------------------------------------------
  auto* saliency_cmd = app.add_subcommand(
      "saliency", "Aggregated input-gradient magnitudes over a dataset");
  std::string saliency_model, saliency_data;
  saliency_cmd->add_option("--model", saliency_model, "Model JSON file")
      ->required();
  saliency_cmd->add_option("--data", saliency_data, "Dataset CSV")->required();
  std::string saliency_norm = "mean";
  saliency_cmd
      ->add_option("--norm", saliency_norm,
                   "Aggregate as mean (default) or sum over rows")
      ->check(CLI::IsMember({"mean", "sum"}));
  OutOpt saliency_out;
  saliency_out.attach(saliency_cmd);
  saliency_cmd->callback([&] {
    const LoadedModel model = load_model(saliency_model);
    const Dataset data = load_csv(saliency_data);
    const auto start = std::chrono::steady_clock::now();
    const SaliencyResult result = gradient_saliency(
        *model.game, data,
        saliency_norm == "sum" ? SaliencyNorm::sum : SaliencyNorm::mean);
    ReportParams params;
    params.normalization = saliency_norm;
    const PowerReport report = make_report(
        model_ref(model), "saliency", data.feature_names, result.scores,
        nullptr, std::nullopt, params, elapsed_ms(start));
    write_output(saliency_out.path, to_json(report), out);
  });

  // ---- compare --------------------------------------------------------
  auto* compare_cmd = app.add_subcommand(
      "compare", "Rank agreement between two or more PowerReports");
  std::vector<std::string> report_paths;
  compare_cmd->add_option("--reports", report_paths, "PowerReport JSON files")
      ->required()
      ->expected(-2);
  int top_k = 5;
  compare_cmd->add_option("--top-k", top_k,
                          "Top-k set size for the overlap matrix (default 5)");
  bool allow_mismatch = false;
  compare_cmd->add_flag(
      "--allow-model-mismatch", allow_mismatch,
      "Compare reports for different model hashes (cross-model studies)");
  OutOpt compare_out;
  compare_out.attach(compare_cmd, "comparison report");
  std::string plot_csv_out, plot_svg_out;
  compare_cmd->add_option("--plot-csv", plot_csv_out,
                          "Write long-format feature,method,value CSV here");
  compare_cmd->add_option("--plot-svg", plot_svg_out,
                          "Write a grouped-bar SVG chart here");
  compare_cmd->callback([&] {
    std::vector<PowerReport> reports;
    reports.reserve(report_paths.size());
    for (const std::string& path : report_paths)
      reports.push_back(power_report_from_json(read_file(path)));
    const ComparisonReport comparison = compare(reports, top_k, allow_mismatch);
    if (!plot_csv_out.empty())
      write_output(plot_csv_out, plot_data_csv(reports), out);
    if (!plot_svg_out.empty())
      write_output(plot_svg_out, plot_svg(reports), out);
    write_output(compare_out.path, to_json(comparison), out);
  });

  // ---- data -----------------------------------------------------------
  auto* data_cmd =
      app.add_subcommand("data", "Dataset utilities (fetch, validate)");
  data_cmd->require_subcommand(1);

  auto* fetch_cmd = data_cmd->add_subcommand(
      "fetch-spect",
      "Download and checksum the UCI SPECT heart-imaging partitions");
  std::string fetch_dir = "data";
  fetch_cmd->add_option("--dir", fetch_dir, "Target directory (default data)");
  std::string fetch_manifest;
  fetch_cmd->add_option("--manifest", fetch_manifest,
                        "Manifest path (default <dir>/spect.manifest.json)");
  bool fetch_record = false;
  fetch_cmd->add_flag("--record", fetch_record,
                      "Record computed SHA-256 hashes into the manifest");
  fetch_cmd->callback([&] {
    fetch_spect(fetch_dir, fetch_manifest, fetch_record, err);
  });

  auto* validate_cmd = data_cmd->add_subcommand(
      "validate", "Strictly parse a binary CSV and summarize it");
  std::string validate_csv;
  validate_cmd->add_option("--csv", validate_csv, "CSV file")->required();
  std::string validate_header = "auto";
  validate_cmd
      ->add_option("--header", validate_header,
                   "Header handling: auto (default), yes, no")
      ->check(CLI::IsMember({"auto", "yes", "no"}));
  std::string validate_label;
  validate_cmd->add_option("--label-column", validate_label,
                           "Label column name (default: first column)");
  OutOpt validate_out;
  validate_out.attach(validate_cmd, "summary");
  validate_cmd->callback([&] {
    CsvSchema schema;
    schema.header = validate_header == "yes"  ? HeaderMode::yes
                    : validate_header == "no" ? HeaderMode::no
                                              : HeaderMode::automatic;
    if (!validate_label.empty()) schema.label_column = validate_label;
    const Dataset data = load_csv(validate_csv, schema);
    std::size_t positives = 0;
    for (std::uint8_t label : data.labels) positives += label;
    nlohmann::ordered_json j;
    j["path"] = validate_csv;
    j["rows"] = data.size();
    j["n_features"] = data.n;
    j["positive_labels"] = positives;
    j["feature_names"] = data.feature_names;
    write_output(validate_out.path, j.dump(2) + "\n", out);
  });

  // ---- parse and dispatch ---------------------------------------------
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitSuccess;
}

int run_command(const std::vector<std::string>& args) {
  return run_command(args, std::cout, std::cerr);
}

}  // namespace banzhaf::cli
