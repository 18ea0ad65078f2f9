// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/rank_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "banzhaf/errors.hpp"

namespace banzhaf {

namespace {

void check_pair(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw ArgumentError("vectors differ in length: " +
                        std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()));
  if (a.empty()) throw ArgumentError("vectors are empty");
}

bool is_constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(),
                     [&](double x) { return x == v.front(); });
}

std::vector<std::size_t> order_by_value(std::span<const double> values,
                                        bool descending) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (values[x] != values[y])
      return descending ? values[x] > values[y] : values[x] < values[y];
    return x < y;
  });
  return order;
}

}  // namespace

std::vector<double> average_ranks(std::span<const double> values) {
  if (values.empty()) throw ArgumentError("vectors are empty");
  const std::vector<std::size_t> order = order_by_value(values, false);
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() &&
           values[order[j + 1]] == values[order[i]])
      ++j;
    // positions i..j (0-based) share the average rank in 1-based terms
    const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> a, std::span<const double> b) {
  check_pair(a, b);
  if (is_constant(a) || is_constant(b)) return 0.0;

  const std::vector<double> ra = average_ranks(a);
  const std::vector<double> rb = average_ranks(b);
  const double n = static_cast<double>(a.size());
  const double mean = (n + 1.0) / 2.0;  // ranks always average to this

  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  return cov / std::sqrt(var_a * var_b);
}

double kendall_tau_b(std::span<const double> a, std::span<const double> b) {
  check_pair(a, b);
  if (is_constant(a) || is_constant(b)) return 0.0;

  // O(n^2) pair walk; comparison vectors are feature-sized, so this is fine.
  std::int64_t concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double da = a[i] - a[j];
      const double db = b[i] - b[j];
      if (da == 0.0 && db == 0.0) continue;  // tied in both: excluded by tau-b
      if (da == 0.0) {
        ++ties_a;
      } else if (db == 0.0) {
        ++ties_b;
      } else if ((da > 0.0) == (db > 0.0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  // Pairs tied in both vectors drop out of each factor under tau-b.
  const double untied_b = concordant + discordant + ties_a;
  const double untied_a = concordant + discordant + ties_b;
  return (static_cast<double>(concordant) - static_cast<double>(discordant)) /
         std::sqrt(untied_a * untied_b);
}

double top_k_overlap(std::span<const double> a, std::span<const double> b,
                     int k) {
  check_pair(a, b);
  if (k < 1 || static_cast<std::size_t>(k) > a.size())
    throw ArgumentError("top-k size " + std::to_string(k) +
                        " is outside [1, " + std::to_string(a.size()) + "]");

  const std::vector<std::size_t> oa = order_by_value(a, true);
  const std::vector<std::size_t> ob = order_by_value(b, true);
  std::vector<std::size_t> ta(oa.begin(), oa.begin() + k);
  std::vector<std::size_t> tb(ob.begin(), ob.begin() + k);
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  std::vector<std::size_t> common;
  std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                        std::back_inserter(common));
  return static_cast<double>(common.size()) / static_cast<double>(k);
}

}  // namespace banzhaf
