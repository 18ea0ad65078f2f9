// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/model_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "banzhaf/coalition.hpp"
#include "banzhaf/errors.hpp"
#include "banzhaf/sha256.hpp"

namespace banzhaf {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Truth tables beyond this many features have no file representation; the
// bits field alone would exceed 2^31 hex characters well before this.
constexpr int kMaxFileTableFeatures = 30;

double parse_strict_double(const std::string& s, const std::string& what) {
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (s.empty() || end != begin + s.size())
    throw ParseError("malformed " + what + " \"" + s + "\"");
  if (!std::isfinite(v))
    throw ParseError(what + " \"" + s + "\" is not finite");
  return v;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw ParseError("unknown model key \"" + key + "\"");
  }
}

std::int64_t require_int(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer())
    throw ParseError(std::string("\"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::string require_string(const json& v, const std::string& what) {
  if (!v.is_string()) throw ParseError(what + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> require_string_array(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_array() || v.empty())
    throw ParseError(std::string("\"") + key +
                     "\" must be a non-empty array");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(require_string(v[i], std::string("\"") + key + "\"[" +
                                           std::to_string(i) + "]"));
  return out;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::shared_ptr<Game> parse_truth_table(const json& j) {
  check_keys(j, {"type", "n", "bits"});
  const std::int64_t n = require_int(j, "n");
  if (n < 1 || n > kMaxFileTableFeatures)
    throw ParseError("truth table \"n\" must be in [1, " +
                     std::to_string(kMaxFileTableFeatures) + "]");
  if (!j.contains("bits")) throw ParseError("missing \"bits\"");
  const std::string bits = require_string(j.at("bits"), "\"bits\"");

  // Two hex digits per byte, byte k holding coalitions 8k..8k+7 with
  // coalition 8k in the least significant bit.
  const std::uint64_t table_bits = std::uint64_t{1} << n;
  const std::size_t bytes = static_cast<std::size_t>((table_bits + 7) / 8);
  if (bits.size() != 2 * bytes)
    throw ParseError("\"bits\" must be exactly " + std::to_string(2 * bytes) +
                     " hex digits for n=" + std::to_string(n) + ", got " +
                     std::to_string(bits.size()));

  std::vector<std::uint64_t> words(TruthTableGame::word_count(static_cast<int>(n)), 0);
  for (std::size_t byte = 0; byte < bytes; ++byte) {
    const int hi = hex_value(bits[2 * byte]);
    const int lo = hex_value(bits[2 * byte + 1]);
    if (hi < 0 || lo < 0)
      throw ParseError("\"bits\" contains a non-hex character");
    const std::uint64_t value = static_cast<std::uint64_t>(hi) << 4 | lo;
    words[byte / 8] |= value << (8 * (byte % 8));
  }
  for (std::uint64_t m = table_bits; m < 64 * words.size(); ++m)
    if ((words[m >> 6] >> (m & 63u)) & 1u)
      throw ParseError("\"bits\" has padding bits set past coalition " +
                       std::to_string(table_bits - 1));
  return std::make_shared<TruthTableGame>(static_cast<int>(n), std::move(words));
}

std::shared_ptr<Game> parse_voting(const json& j) {
  check_keys(j, {"type", "weights", "quota"});
  if (!j.contains("weights")) throw ParseError("missing \"weights\"");
  const auto& w = j.at("weights");
  if (!w.is_array() || w.empty())
    throw ParseError("\"weights\" must be a non-empty array");
  std::vector<std::int64_t> weights;
  weights.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_number_integer())
      throw ParseError("\"weights\"[" + std::to_string(i) +
                       "] must be an integer");
    weights.push_back(w[i].get<std::int64_t>());
  }
  const std::int64_t quota = require_int(j, "quota");
  try {
    return std::make_shared<WeightedVotingGame>(std::move(weights), quota);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

std::shared_ptr<Game> parse_linear(const json& j, ModelKind kind) {
  check_keys(j, {"type", "weights", "bias"});
  std::vector<std::string> weights = require_string_array(j, "weights");
  if (!j.contains("bias")) throw ParseError("missing \"bias\"");
  const std::string bias = require_string(j.at("bias"), "\"bias\"");
  try {
    return std::make_shared<LinearThresholdGame>(std::move(weights), bias, kind);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

std::shared_ptr<Game> parse_mlp(const json& j) {
  check_keys(j, {"type", "w1", "b1", "w2", "b2"});
  if (!j.contains("w1")) throw ParseError("missing \"w1\"");
  const auto& w1_json = j.at("w1");
  if (!w1_json.is_array() || w1_json.empty())
    throw ParseError("\"w1\" must be a non-empty array of rows");

  const int hidden = static_cast<int>(w1_json.size());
  std::size_t n = 0;
  std::vector<double> w1;
  for (int h = 0; h < hidden; ++h) {
    const auto& row = w1_json[h];
    if (!row.is_array() || row.empty())
      throw ParseError("\"w1\"[" + std::to_string(h) +
                       "] must be a non-empty array");
    if (h == 0) {
      n = row.size();
      if (n > static_cast<std::size_t>(kMaxFeatures))
        throw ParseError("mlp: feature count must be in [1, 63]");
      w1.reserve(static_cast<std::size_t>(hidden) * n);
    } else if (row.size() != n) {
      throw ParseError("\"w1\" rows have inconsistent lengths");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const std::string cell =
          require_string(row[c], "\"w1\"[" + std::to_string(h) + "][" +
                                     std::to_string(c) + "]");
      w1.push_back(parse_strict_double(cell, "\"w1\" entry"));
    }
  }

  const std::vector<std::string> b1_s = require_string_array(j, "b1");
  const std::vector<std::string> w2_s = require_string_array(j, "w2");
  if (static_cast<int>(b1_s.size()) != hidden ||
      static_cast<int>(w2_s.size()) != hidden)
    throw ParseError("\"b1\" and \"w2\" must each have one entry per \"w1\" row");
  std::vector<double> b1, w2;
  b1.reserve(hidden);
  w2.reserve(hidden);
  for (const auto& s : b1_s) b1.push_back(parse_strict_double(s, "\"b1\" entry"));
  for (const auto& s : w2_s) w2.push_back(parse_strict_double(s, "\"w2\" entry"));

  if (!j.contains("b2")) throw ParseError("missing \"b2\"");
  const double b2 = parse_strict_double(
      require_string(j.at("b2"), "\"b2\""), "\"b2\"");

  try {
    return std::make_shared<MlpGame>(static_cast<int>(n), hidden, std::move(w1),
                                     std::move(b1), std::move(w2), b2);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

ordered_json model_json(const Game& game) {
  ordered_json j;
  if (const auto* table = dynamic_cast<const TruthTableGame*>(&game)) {
    if (table->n_features() > kMaxFileTableFeatures)
      throw ArgumentError("truth table too large for the file format (n > " +
                          std::to_string(kMaxFileTableFeatures) + ")");
    j["type"] = "truth_table";
    j["n"] = table->n_features();
    static constexpr char kHex[] = "0123456789abcdef";
    const std::uint64_t table_bits = table->table_size();
    const std::size_t bytes = static_cast<std::size_t>((table_bits + 7) / 8);
    std::string bits;
    bits.reserve(2 * bytes);
    for (std::size_t byte = 0; byte < bytes; ++byte) {
      const unsigned value = static_cast<unsigned>(
          (table->words()[byte / 8] >> (8 * (byte % 8))) & 0xFFu);
      bits.push_back(kHex[value >> 4]);
      bits.push_back(kHex[value & 0x0Fu]);
    }
    j["bits"] = bits;
  } else if (const auto* voting = dynamic_cast<const WeightedVotingGame*>(&game)) {
    j["type"] = "voting";
    j["weights"] = voting->weights();
    j["quota"] = voting->quota();
  } else if (const auto* linear = dynamic_cast<const LinearThresholdGame*>(&game)) {
    j["type"] = std::string(to_string(linear->kind()));
    j["weights"] = linear->weight_strings();
    j["bias"] = linear->bias_string();
  } else if (const auto* mlp = dynamic_cast<const MlpGame*>(&game)) {
    j["type"] = "mlp";
    const int n = mlp->n_features();
    ordered_json rows = ordered_json::array();
    for (int h = 0; h < mlp->hidden(); ++h) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < n; ++c)
        row.push_back(decimal_string(mlp->w1()[static_cast<std::size_t>(h) * n + c]));
      rows.push_back(std::move(row));
    }
    j["w1"] = std::move(rows);
    ordered_json b1 = ordered_json::array(), w2 = ordered_json::array();
    for (double v : mlp->b1()) b1.push_back(decimal_string(v));
    for (double v : mlp->w2()) w2.push_back(decimal_string(v));
    j["b1"] = std::move(b1);
    j["w2"] = std::move(w2);
    j["b2"] = decimal_string(mlp->b2());
  } else {
    throw ArgumentError(
        "this game type has no file representation (prune certificates and "
        "shrunken models do)");
  }
  return j;
}

}  // namespace

LoadedModel model_from_json_text(std::string_view text, std::string path_label) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    const std::string where = path_label.empty() ? "model" : path_label;
    throw ParseError(where + ": invalid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw ParseError("model must be a JSON object with a \"type\" string");
  const std::string tag = j.at("type").get<std::string>();

  LoadedModel loaded;
  loaded.kind = model_kind_from_string(tag);  // throws ParseError, names tag
  loaded.path = std::move(path_label);
  switch (loaded.kind) {
    case ModelKind::truth_table:
      loaded.game = parse_truth_table(j);
      break;
    case ModelKind::voting:
      loaded.game = parse_voting(j);
      break;
    case ModelKind::linear:
    case ModelKind::logreg:
      loaded.game = parse_linear(j, loaded.kind);
      break;
    case ModelKind::mlp:
      loaded.game = parse_mlp(j);
      break;
  }
  loaded.hash = model_hash(*loaded.game);
  return loaded;
}

LoadedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return model_from_json_text(buffer.str(), path.string());
}

std::string model_to_json(const Game& game) {
  return model_json(game).dump(2) + "\n";
}

void save_model(const Game& game, const std::filesystem::path& path) {
  const std::string text = model_to_json(game);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path.string());
  out << text;
  if (!out) throw ArgumentError("failed writing " + path.string());
}

std::string model_hash(const Game& game) {
  return "sha256:" + sha256_hex(model_to_json(game));
}

std::string conversion_to_json(const VotingConversion& conversion) {
  ordered_json j;
  j["constant_one"] = conversion.constant_one;
  j["scale"] = conversion.scale;
  if (conversion.game) {
    j["weights"] = conversion.game->weights();
    j["quota"] = conversion.game->quota();
  }
  ordered_json polarity = ordered_json::array();
  for (FeaturePolarity p : conversion.polarity)
    polarity.push_back(p == FeaturePolarity::direct ? "direct"
                                                    : "complemented");
  j["polarity"] = std::move(polarity);
  return j.dump(2) + "\n";
}

}  // namespace banzhaf
