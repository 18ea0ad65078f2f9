// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "banzhaf/coalition.hpp"

namespace banzhaf {

// Rows of binary feature vectors with binary labels. Feature vectors are
// stored as coalition masks; width is uniform and at most kMaxFeatures.
struct Dataset {
  int n = 0;
  std::vector<std::uint64_t> rows;     // feature masks
  std::vector<std::uint8_t> labels;    // 0 or 1, aligned with rows
  std::vector<std::string> feature_names;  // defaults f1..fn

  std::size_t size() const { return rows.size(); }
  Coalition coalition(std::size_t r) const { return {rows[r], n}; }
  std::vector<double> row_reals(std::size_t r) const;

  // Appends rows of another dataset of the same width.
  void append(const Dataset& other);
};

enum class HeaderMode { automatic, yes, no };

struct CsvSchema {
  HeaderMode header = HeaderMode::automatic;
  // Label column by name (requires a header); nullopt = first column.
  std::optional<std::string> label_column;
};

// Strict CSV ingestion: every cell must be 0 or 1, rows must be uniform.
// Parse errors carry 1-based row/column coordinates.
Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema = {});
Dataset parse_csv_text(std::string_view text, const CsvSchema& schema = {},
                       const std::string& origin = "<memory>");

// Writes header (label,<feature names...>) then label-first rows.
// load_csv(save_csv(d)) reproduces d exactly.
void save_csv(const Dataset& data, const std::filesystem::path& path);
std::string to_csv_text(const Dataset& data);

// Quantizes a real column into one-hot bucket columns. Buckets are
// left-closed: a value equal to a threshold lands in the upper bucket.
// Returns len(thresholds)+1 columns.
std::vector<std::vector<std::uint8_t>> quantize(std::span<const double> values,
                                                std::span<const double> thresholds);

// One-hot encodes a categorical column, one column per observed category in
// sorted order, named "<feature>=<category>".
struct OneHotColumns {
  std::vector<std::string> names;
  std::vector<std::vector<std::uint8_t>> columns;
};
OneHotColumns one_hot(std::span<const std::string> values,
                      std::string_view feature_name);

}  // namespace banzhaf
