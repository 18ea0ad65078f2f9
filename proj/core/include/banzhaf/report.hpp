// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "banzhaf/pruning.hpp"
#include "banzhaf/version.hpp"

namespace banzhaf {

struct ModelRef {
  std::string path;
  std::string type;
  std::string hash;
};

struct ReportEntry {
  int feature_index = 0;
  std::string feature_name;
  double value = 0.0;
  std::optional<std::uint64_t> swing_count;  // exact methods only
  std::optional<double> ci_half_width;       // sampling methods only
};

struct ReportParams {
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> normalization;
  std::optional<std::string> rng;
};

// One method's per-feature scores for one model. The method tag is one of:
// exact, generating_function, monte_carlo, weighted_mc, empirical, saliency,
// l1_coefficients.
struct PowerReport {
  std::string spec_version{kSpecVersion};
  ModelRef model;
  std::string method;
  int n_features = 0;
  std::vector<ReportEntry> entries;
  ReportParams params;
  double runtime_ms = 0.0;
};

// Canonical JSON (fixed key order, newline-terminated). from_json validates
// structure and value constraints against the committed schema
// (schemas/power_report.schema.json) and the spec_version gate.
std::string to_json(const PowerReport& report);
PowerReport power_report_from_json(std::string_view text);

struct ComparisonReport {
  std::string spec_version{kSpecVersion};
  std::vector<std::string> methods;
  std::vector<std::string> model_hashes;  // aligned with methods
  int top_k = 0;
  std::vector<std::vector<double>> spearman;       // symmetric, unit diagonal
  std::vector<std::vector<double>> kendall;        // symmetric, unit diagonal
  std::vector<std::vector<double>> top_k_overlap;  // symmetric, unit diagonal
  std::vector<std::string> feature_names;
  std::vector<std::vector<double>> values;  // [feature][method]
};

// Pairwise rank agreement between >= 2 reports over identical feature sets.
// Reports for different model hashes are refused unless allow_model_mismatch
// (cross-model comparisons, e.g. MLP saliency vs logreg coefficients, are
// legitimate but must be asked for).
ComparisonReport compare(const std::vector<PowerReport>& reports, int top_k,
                         bool allow_model_mismatch = false);

std::string to_json(const ComparisonReport& report);

// Long-format CSV "feature,method,value", feature-major, methods in the
// given order.
std::string plot_data_csv(const std::vector<PowerReport>& reports);

// Self-contained grouped-bar SVG of the same data, one bar color per method,
// values scaled per method to its maximum (rankings are what the picture is
// for; raw values live in the CSV).
std::string plot_svg(const std::vector<PowerReport>& reports);

// Certificate serialization.
std::string certificate_to_json(const PruneCertificate& certificate);
PruneCertificate certificate_from_json(std::string_view text);

}  // namespace banzhaf
