// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

namespace banzhaf {

// Ranks 1..n with ties assigned the average of their positions.
std::vector<double> average_ranks(std::span<const double> values);

// Spearman rank correlation: Pearson correlation of average ranks. Returns
// 0 when either vector is constant (the correlation is undefined there; a
// fixed finite value keeps comparison matrices well-formed).
double spearman(std::span<const double> a, std::span<const double> b);

// Kendall tau-b with tie correction; same constant-vector convention.
double kendall_tau_b(std::span<const double> a, std::span<const double> b);

// |top-k(a) intersect top-k(b)| / k, top-k by value descending with index
// ascending as the deterministic tie-break.
double top_k_overlap(std::span<const double> a, std::span<const double> b, int k);

}  // namespace banzhaf
