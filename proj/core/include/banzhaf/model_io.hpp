// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "banzhaf/convert.hpp"
#include "banzhaf/models.hpp"

namespace banzhaf {

// A model deserialized from the JSON file format, plus identification for
// reports. hash is the SHA-256 of the model's canonical serialization, so
// two files describing the same model hash identically regardless of
// whitespace or key order.
struct LoadedModel {
  std::shared_ptr<Game> game;
  ModelKind kind = ModelKind::voting;
  std::string hash;
  std::string path;
};

LoadedModel load_model(const std::filesystem::path& path);
LoadedModel model_from_json_text(std::string_view text, std::string path_label = "");

// Canonical JSON for the four model classes (newline-terminated). Throws
// ArgumentError for game types without a file representation.
std::string model_to_json(const Game& game);
void save_model(const Game& game, const std::filesystem::path& path);

// SHA-256 of model_to_json(game), prefixed "sha256:".
std::string model_hash(const Game& game);

// Conversion artifacts for linear -> voting rewrites.
std::string conversion_to_json(const VotingConversion& conversion);

}  // namespace banzhaf
