// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "json.hpp"

#include "banzhaf/errors.hpp"
#include "banzhaf/models.hpp"
#include "banzhaf/rank_stats.hpp"

namespace banzhaf {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::array<std::string_view, 7> kMethods = {
    "exact",    "generating_function", "monte_carlo",     "weighted_mc",
    "empirical", "saliency",           "l1_coefficients"};

bool known_method(std::string_view method) {
  return std::find(kMethods.begin(), kMethods.end(), method) != kMethods.end();
}

// Accepts this library's major version only: a major bump means the schema
// changed shape, and silently misreading a report is worse than refusing.
void check_spec_version(const std::string& version) {
  const std::string_view want(kSpecVersion);
  const std::size_t dot = want.find('.');
  const std::string_view major = want.substr(0, dot);
  if (version.size() <= major.size() ||
      version.compare(0, major.size(), major) != 0 ||
      version[major.size()] != '.')
    throw ParseError("unsupported spec_version \"" + version +
                     "\" (this build reads " + std::string(major) + ".x)");
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const char* where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok)
      throw ParseError(std::string("unknown ") + where + " key \"" + key +
                       "\"");
  }
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key))
    throw ParseError(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::string get_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string())
    throw ParseError(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

double get_number(const json& v, const std::string& what) {
  if (!v.is_number())
    throw ParseError(what + " must be a number");
  return v.get<double>();
}

std::uint64_t get_uint(const json& v, const std::string& what) {
  if (!v.is_number_integer() || v.is_number_float() ||
      (v.is_number_integer() && !v.is_number_unsigned() &&
       v.get<std::int64_t>() < 0))
    throw ParseError(what + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

ordered_json params_json(const ReportParams& p) {
  ordered_json j = ordered_json::object();
  if (p.epsilon) j["epsilon"] = *p.epsilon;
  if (p.delta) j["delta"] = *p.delta;
  if (p.k) j["k"] = *p.k;
  if (p.seed) j["seed"] = *p.seed;
  if (p.normalization) j["normalization"] = *p.normalization;
  if (p.rng) j["rng"] = *p.rng;
  return j;
}

std::string csv_safe(const std::string& value) {
  if (value.empty() || value.find_first_of(",\"\r\n") != std::string::npos)
    throw ArgumentError("name not representable in CSV: \"" + value + "\"");
  return value;
}

std::string xml_escape(const std::string& value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

void check_comparable(const std::vector<PowerReport>& reports,
                      bool allow_model_mismatch) {
  if (reports.size() < 2)
    throw ArgumentError("comparison needs at least 2 reports");
  const PowerReport& first = reports.front();
  for (const PowerReport& r : reports) {
    if (r.n_features != first.n_features)
      throw ArgumentError("reports cover different feature counts (" +
                          std::to_string(first.n_features) + " vs " +
                          std::to_string(r.n_features) + ")");
    for (int f = 0; f < r.n_features; ++f)
      if (r.entries[f].feature_name != first.entries[f].feature_name)
        throw ArgumentError("reports disagree on the name of feature " +
                            std::to_string(f) + " (\"" +
                            first.entries[f].feature_name + "\" vs \"" +
                            r.entries[f].feature_name + "\")");
    if (!allow_model_mismatch && r.model.hash != first.model.hash)
      throw ArgumentError(
          "reports describe different models (" + first.model.hash + " vs " +
          r.model.hash +
          "); pass allow_model_mismatch to compare across models");
  }
}

}  // namespace

std::string to_json(const PowerReport& report) {
  if (static_cast<int>(report.entries.size()) != report.n_features)
    throw ArgumentError("report has " + std::to_string(report.entries.size()) +
                        " entries for " + std::to_string(report.n_features) +
                        " features");
  ordered_json j;
  j["spec_version"] = report.spec_version;
  j["model"] = {{"path", report.model.path},
                {"type", report.model.type},
                {"hash", report.model.hash}};
  j["method"] = report.method;
  j["n_features"] = report.n_features;
  ordered_json entries = ordered_json::array();
  for (const ReportEntry& e : report.entries) {
    ordered_json entry;
    entry["feature_index"] = e.feature_index;
    entry["feature_name"] = e.feature_name;
    entry["value"] = e.value;
    if (e.swing_count) entry["swing_count"] = *e.swing_count;
    if (e.ci_half_width) entry["ci_half_width"] = *e.ci_half_width;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  j["params"] = params_json(report.params);
  j["runtime_ms"] = report.runtime_ms;
  return j.dump(2) + "\n";
}

PowerReport power_report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("report must be a JSON object");
  check_keys(j,
             {"spec_version", "model", "method", "n_features", "entries",
              "params", "runtime_ms"},
             "report");

  PowerReport report;
  report.spec_version = get_string(j, "spec_version");
  check_spec_version(report.spec_version);

  const json& model = require(j, "model");
  if (!model.is_object()) throw ParseError("\"model\" must be an object");
  check_keys(model, {"path", "type", "hash"}, "model");
  report.model.path = get_string(model, "path");
  report.model.type = get_string(model, "type");
  report.model.hash = get_string(model, "hash");

  report.method = get_string(j, "method");
  if (!known_method(report.method))
    throw ParseError("unknown method \"" + report.method + "\"");

  const json& n = require(j, "n_features");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1)
    throw ParseError("\"n_features\" must be a positive integer");
  report.n_features = n.get<int>();

  const json& entries = require(j, "entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(report.n_features))
    throw ParseError("\"entries\" must be an array of n_features entries");
  report.entries.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& e = entries[i];
    const std::string where = "entries[" + std::to_string(i) + "]";
    if (!e.is_object()) throw ParseError(where + " must be an object");
    check_keys(e,
               {"feature_index", "feature_name", "value", "swing_count",
                "ci_half_width"},
               "entry");
    ReportEntry entry;
    const json& idx = require(e, "feature_index");
    if (!idx.is_number_integer() ||
        idx.get<std::int64_t>() != static_cast<std::int64_t>(i))
      throw ParseError(where + ".feature_index must be " + std::to_string(i));
    entry.feature_index = static_cast<int>(i);
    entry.feature_name = get_string(e, "feature_name");
    entry.value = get_number(require(e, "value"), where + ".value");
    if (!std::isfinite(entry.value))
      throw ParseError(where + ".value must be finite");
    if (e.contains("swing_count"))
      entry.swing_count = get_uint(e.at("swing_count"), where + ".swing_count");
    if (e.contains("ci_half_width"))
      entry.ci_half_width =
          get_number(e.at("ci_half_width"), where + ".ci_half_width");
    report.entries.push_back(std::move(entry));
  }

  const json& params = require(j, "params");
  if (!params.is_object()) throw ParseError("\"params\" must be an object");
  check_keys(params, {"epsilon", "delta", "k", "seed", "normalization", "rng"},
             "params");
  if (params.contains("epsilon"))
    report.params.epsilon = get_number(params.at("epsilon"), "params.epsilon");
  if (params.contains("delta"))
    report.params.delta = get_number(params.at("delta"), "params.delta");
  if (params.contains("k"))
    report.params.k = get_uint(params.at("k"), "params.k");
  if (params.contains("seed"))
    report.params.seed = get_uint(params.at("seed"), "params.seed");
  if (params.contains("normalization"))
    report.params.normalization = params.at("normalization").get<std::string>();
  if (params.contains("rng"))
    report.params.rng = params.at("rng").get<std::string>();

  report.runtime_ms = get_number(require(j, "runtime_ms"), "runtime_ms");
  return report;
}

ComparisonReport compare(const std::vector<PowerReport>& reports, int top_k,
                         bool allow_model_mismatch) {
  check_comparable(reports, allow_model_mismatch);
  const int n = reports.front().n_features;
  if (top_k < 1 || top_k > n)
    throw ArgumentError("top-k size " + std::to_string(top_k) +
                        " is outside [1, " + std::to_string(n) + "]");

  const int m = static_cast<int>(reports.size());
  ComparisonReport out;
  out.top_k = top_k;
  out.methods.reserve(m);
  out.model_hashes.reserve(m);
  for (const PowerReport& r : reports) {
    out.methods.push_back(r.method);
    out.model_hashes.push_back(r.model.hash);
  }
  out.feature_names.reserve(n);
  for (const ReportEntry& e : reports.front().entries)
    out.feature_names.push_back(e.feature_name);

  std::vector<std::vector<double>> columns(m, std::vector<double>(n));
  for (int c = 0; c < m; ++c)
    for (int f = 0; f < n; ++f) columns[c][f] = reports[c].entries[f].value;

  out.values.assign(n, std::vector<double>(m));
  for (int f = 0; f < n; ++f)
    for (int c = 0; c < m; ++c) out.values[f][c] = columns[c][f];

  auto matrix = [&](auto stat) {
    std::vector<std::vector<double>> grid(m, std::vector<double>(m, 1.0));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        grid[a][b] = grid[b][a] = stat(columns[a], columns[b]);
    return grid;
  };
  out.spearman = matrix([](const auto& a, const auto& b) {
    return spearman(a, b);
  });
  out.kendall = matrix([](const auto& a, const auto& b) {
    return kendall_tau_b(a, b);
  });
  out.top_k_overlap = matrix([&](const auto& a, const auto& b) {
    return top_k_overlap(a, b, top_k);
  });
  return out;
}

std::string to_json(const ComparisonReport& report) {
  ordered_json j;
  j["spec_version"] = report.spec_version;
  j["methods"] = report.methods;
  j["model_hashes"] = report.model_hashes;
  j["top_k"] = report.top_k;
  j["spearman"] = report.spearman;
  j["kendall"] = report.kendall;
  j["top_k_overlap"] = report.top_k_overlap;
  j["feature_names"] = report.feature_names;
  j["values"] = report.values;
  return j.dump(2) + "\n";
}

std::string plot_data_csv(const std::vector<PowerReport>& reports) {
  check_comparable(reports, /*allow_model_mismatch=*/true);
  std::string out = "feature,method,value\n";
  const int n = reports.front().n_features;
  for (int f = 0; f < n; ++f)
    for (const PowerReport& r : reports) {
      out += csv_safe(r.entries[f].feature_name);
      out += ',';
      out += csv_safe(r.method);
      out += ',';
      out += decimal_string(r.entries[f].value);
      out += '\n';
    }
  return out;
}

std::string plot_svg(const std::vector<PowerReport>& reports) {
  check_comparable(reports, /*allow_model_mismatch=*/true);
  const int n = reports.front().n_features;
  const int m = static_cast<int>(reports.size());

  static constexpr std::array<const char*, 7> kPalette = {
      "#4477aa", "#ee6677", "#228833", "#ccbb44",
      "#66ccee", "#aa3377", "#bbbbbb"};

  std::vector<double> method_max(m, 0.0);
  for (int c = 0; c < m; ++c)
    for (const ReportEntry& e : reports[c].entries)
      method_max[c] = std::max(method_max[c], std::abs(e.value));

  const double bar_w = 14.0, bar_gap = 2.0, group_gap = 18.0;
  const double group_w = m * (bar_w + bar_gap) - bar_gap + group_gap;
  const double left = 40.0, top = 20.0, plot_h = 220.0, label_h = 90.0;
  const double width = left + n * group_w + 20.0;
  const double height = top + plot_h + label_h + 24.0 * m;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         decimal_string(width) + "\" height=\"" + decimal_string(height) +
         "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // baseline
  svg += "<line x1=\"" + decimal_string(left) + "\" y1=\"" +
         decimal_string(top + plot_h) + "\" x2=\"" +
         decimal_string(left + n * group_w) + "\" y2=\"" +
         decimal_string(top + plot_h) + "\" stroke=\"#333\"/>\n";

  for (int f = 0; f < n; ++f) {
    const double gx = left + f * group_w;
    for (int c = 0; c < m; ++c) {
      const double value = std::abs(reports[c].entries[f].value);
      const double unit = method_max[c] > 0.0 ? value / method_max[c] : 0.0;
      const double h = unit * plot_h;
      const double x = gx + c * (bar_w + bar_gap);
      svg += "<rect x=\"" + decimal_string(x) + "\" y=\"" +
             decimal_string(top + plot_h - h) + "\" width=\"" +
             decimal_string(bar_w) + "\" height=\"" + decimal_string(h) +
             "\" fill=\"" + kPalette[c % kPalette.size()] + "\"/>\n";
    }
    const double lx = gx + (group_w - group_gap) / 2.0;
    const double ly = top + plot_h + 8.0;
    svg += "<text x=\"" + decimal_string(lx) + "\" y=\"" + decimal_string(ly) +
           "\" text-anchor=\"end\" transform=\"rotate(-60 " +
           decimal_string(lx) + " " + decimal_string(ly) + ")\">" +
           xml_escape(reports.front().entries[f].feature_name) + "</text>\n";
  }

  for (int c = 0; c < m; ++c) {
    const double y = top + plot_h + label_h + 24.0 * c;
    svg += "<rect x=\"" + decimal_string(left) + "\" y=\"" +
           decimal_string(y) + "\" width=\"12\" height=\"12\" fill=\"" +
           kPalette[c % kPalette.size()] + "\"/>\n";
    svg += "<text x=\"" + decimal_string(left + 18.0) + "\" y=\"" +
           decimal_string(y + 10.0) + "\">" + xml_escape(reports[c].method) +
           " (peak " + decimal_string(method_max[c]) + ")</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string certificate_to_json(const PruneCertificate& certificate) {
  ordered_json j;
  j["spec_version"] = kSpecVersion;
  j["pruned"] = certificate.pruned;
  j["kept"] = certificate.kept;
  ordered_json v;
  v["mode"] = certificate.verification.mode;
  v["checks"] = certificate.verification.checks;
  v["mismatches"] = certificate.verification.mismatches;
  if (certificate.verification.seed)
    v["seed"] = *certificate.verification.seed;
  j["verification"] = std::move(v);
  j["model_hash"] = certificate.model_hash;
  return j.dump(2) + "\n";
}

PruneCertificate certificate_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid certificate JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("certificate must be a JSON object");
  check_keys(j, {"spec_version", "pruned", "kept", "verification", "model_hash"},
             "certificate");
  check_spec_version(get_string(j, "spec_version"));

  PruneCertificate cert;
  auto read_index_array = [&](const char* key) {
    const json& v = require(j, key);
    if (!v.is_array())
      throw ParseError(std::string("\"") + key + "\" must be an array");
    std::vector<int> out;
    out.reserve(v.size());
    for (const json& e : v) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
        throw ParseError(std::string("\"") + key +
                         "\" must hold non-negative integers");
      out.push_back(e.get<int>());
    }
    return out;
  };
  cert.pruned = read_index_array("pruned");
  cert.kept = read_index_array("kept");

  const json& v = require(j, "verification");
  if (!v.is_object()) throw ParseError("\"verification\" must be an object");
  check_keys(v, {"mode", "checks", "mismatches", "seed"}, "verification");
  cert.verification.mode = get_string(v, "mode");
  if (cert.verification.mode != "exhaustive" &&
      cert.verification.mode != "sampled" && !cert.verification.mode.empty())
    throw ParseError("verification.mode must be \"exhaustive\" or \"sampled\"");
  cert.verification.checks =
      get_uint(require(v, "checks"), "verification.checks");
  cert.verification.mismatches =
      get_uint(require(v, "mismatches"), "verification.mismatches");
  if (v.contains("seed"))
    cert.verification.seed = get_uint(v.at("seed"), "verification.seed");

  cert.model_hash = get_string(j, "model_hash");
  return cert;
}

}  // namespace banzhaf
