// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <utility>

#include "banzhaf/errors.hpp"

namespace banzhaf {

namespace {

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      return cells;
    }
    cells.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

bool is_binary_cell(const std::string& cell) {
  return cell == "0" || cell == "1";
}

[[noreturn]] void fail(const std::string& origin, std::size_t row,
                       std::size_t col, const std::string& message) {
  throw ParseError(origin + ":" + std::to_string(row) + ":" +
                   std::to_string(col) + ": " + message);
}

void check_writable_name(const std::string& name) {
  if (name.empty() || name.find_first_of(",\"\r\n") != std::string::npos)
    throw ArgumentError("feature name not representable in CSV: \"" + name +
                        "\"");
}

}  // namespace

std::vector<double> Dataset::row_reals(std::size_t r) const {
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j)
    x[j] = (rows[r] >> j) & 1u ? 1.0 : 0.0;
  return x;
}

void Dataset::append(const Dataset& other) {
  if (other.n != n)
    throw ArgumentError("cannot append a " + std::to_string(other.n) +
                        "-feature dataset to a " + std::to_string(n) +
                        "-feature dataset");
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  labels.insert(labels.end(), other.labels.begin(), other.labels.end());
}

Dataset parse_csv_text(std::string_view text, const CsvSchema& schema,
                       const std::string& origin) {
  // Physical lines, 1-based; a trailing newline does not add an empty row.
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(origin + ": no rows");

  std::vector<std::string> first = split_line(lines[0]);
  const bool has_header = [&] {
    switch (schema.header) {
      case HeaderMode::yes:
        return true;
      case HeaderMode::no:
        return false;
      case HeaderMode::automatic:
        return !std::all_of(first.begin(), first.end(), is_binary_cell);
    }
    return false;
  }();
  if (schema.label_column && !has_header)
    throw ArgumentError("selecting the label column by name requires a header");

  const std::size_t width = first.size();
  if (width < 2)
    fail(origin, 1, 1, "need a label column and at least one feature column");
  if (width - 1 > static_cast<std::size_t>(kMaxFeatures))
    fail(origin, 1, 1,
         "too many feature columns (limit " + std::to_string(kMaxFeatures) +
             ")");

  std::size_t label_col = 0;
  std::vector<std::string> names;
  if (has_header) {
    if (schema.label_column) {
      const auto it = std::find(first.begin(), first.end(),
                                *schema.label_column);
      if (it == first.end())
        fail(origin, 1, 1,
             "no column named \"" + *schema.label_column + "\" in the header");
      label_col = static_cast<std::size_t>(it - first.begin());
    }
    for (std::size_t c = 0; c < width; ++c) {
      if (c == label_col) continue;
      if (first[c].empty()) fail(origin, 1, c + 1, "empty column name");
      names.push_back(first[c]);
    }
  } else {
    for (std::size_t c = 1; c < width; ++c)
      names.push_back("f" + std::to_string(c));
  }

  Dataset data;
  data.n = static_cast<int>(width - 1);
  data.feature_names = std::move(names);

  for (std::size_t r = has_header ? 1 : 0; r < lines.size(); ++r) {
    const std::size_t row_no = r + 1;
    if (lines[r].empty()) fail(origin, row_no, 1, "empty row");
    const std::vector<std::string> cells = split_line(lines[r]);
    if (cells.size() != width)
      fail(origin, row_no, 1,
           "expected " + std::to_string(width) + " cells, found " +
               std::to_string(cells.size()));
    std::uint64_t mask = 0;
    std::uint8_t label = 0;
    int feature = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (!is_binary_cell(cells[c]))
        fail(origin, row_no, c + 1,
             "cell \"" + cells[c] + "\" is not 0 or 1");
      const bool one = cells[c] == "1";
      if (c == label_col) {
        label = one ? 1 : 0;
      } else {
        if (one) mask |= std::uint64_t{1} << feature;
        ++feature;
      }
    }
    data.rows.push_back(mask);
    data.labels.push_back(label);
  }
  if (data.rows.empty()) throw ParseError(origin + ": no data rows");
  return data;
}

Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv_text(buffer.str(), schema, path.string());
}

std::string to_csv_text(const Dataset& data) {
  if (static_cast<int>(data.feature_names.size()) != data.n)
    throw ArgumentError("dataset has " +
                        std::to_string(data.feature_names.size()) +
                        " feature names for " + std::to_string(data.n) +
                        " features");
  std::string out = "label";
  for (const auto& name : data.feature_names) {
    check_writable_name(name);
    out += ',';
    out += name;
  }
  out += '\n';
  for (std::size_t r = 0; r < data.size(); ++r) {
    out += data.labels[r] ? '1' : '0';
    for (int j = 0; j < data.n; ++j) {
      out += ',';
      out += (data.rows[r] >> j) & 1u ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

void save_csv(const Dataset& data, const std::filesystem::path& path) {
  const std::string text = to_csv_text(data);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path.string());
  out << text;
  if (!out) throw ArgumentError("failed writing " + path.string());
}

std::vector<std::vector<std::uint8_t>> quantize(
    std::span<const double> values, std::span<const double> thresholds) {
  if (thresholds.empty()) throw ArgumentError("need at least one threshold");
  for (std::size_t t = 1; t < thresholds.size(); ++t)
    if (!(thresholds[t - 1] < thresholds[t]))
      throw ArgumentError("thresholds must be strictly increasing");

  std::vector<std::vector<std::uint8_t>> columns(
      thresholds.size() + 1,
      std::vector<std::uint8_t>(values.size(), 0));
  for (std::size_t r = 0; r < values.size(); ++r) {
    // upper_bound counts thresholds <= value, so a value equal to a
    // threshold lands in the bucket above it (left-closed buckets).
    const auto upper = std::upper_bound(thresholds.begin(), thresholds.end(),
                                        values[r]);
    const auto bucket = static_cast<std::size_t>(upper - thresholds.begin());
    columns[bucket][r] = 1;
  }
  return columns;
}

OneHotColumns one_hot(std::span<const std::string> values,
                      std::string_view feature_name) {
  if (values.empty()) throw ArgumentError("no values to encode");
  std::vector<std::string> categories(values.begin(), values.end());
  std::sort(categories.begin(), categories.end());
  categories.erase(std::unique(categories.begin(), categories.end()),
                   categories.end());

  OneHotColumns out;
  out.names.reserve(categories.size());
  out.columns.assign(categories.size(),
                     std::vector<std::uint8_t>(values.size(), 0));
  for (std::size_t c = 0; c < categories.size(); ++c)
    out.names.push_back(std::string(feature_name) + "=" + categories[c]);
  for (std::size_t r = 0; r < values.size(); ++r) {
    const auto it = std::lower_bound(categories.begin(), categories.end(),
                                     values[r]);
    out.columns[static_cast<std::size_t>(it - categories.begin())][r] = 1;
  }
  return out;
}

}  // namespace banzhaf
