// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "banzhaf/models.hpp"

namespace banzhaf {

// Effective cap on exhaustive enumeration. Defaults to 26 (an 8 MiB packed
// table); override with the BANZHAF_EXACT_CAP environment variable or
// ExactOptions::cap.
int default_exact_cap();

struct ExactOptions {
  int cap = 0;      // 0 = default_exact_cap()
  int threads = 0;  // 0 = hardware concurrency
};

// Exact per-feature result. indices[i] = swing_counts[i] / 2^(n-1); a
// feature is listed in dummies exactly when its swing count is zero.
struct ExactResult {
  int n = 0;
  std::vector<std::uint64_t> swing_counts;
  std::vector<double> indices;
  std::vector<int> dummies;
  std::uint64_t evaluations = 0;
  double runtime_ms = 0.0;
};

// Evaluates the game on every mask in [0, 2^n) into a packed table. The mask
// space is split into contiguous 64-aligned chunks that may be filled in
// parallel; the result is identical for any thread count.
TruthTableGame build_truth_table(const Game& game, const ExactOptions& opts = {});

// Exhaustive Banzhaf: swing_counts[i] = #{m : bit i of m clear and
// table[m] != table[m | 2^i]}, counted by strided XOR + popcount scans over
// the packed table. Per-chunk partial counts are summed in fixed chunk
// order, so the result is bit-identical regardless of thread count.
ExactResult exact_banzhaf(const Game& game, const ExactOptions& opts = {});

// Swing scan over an already-built table (no evaluations of the source).
ExactResult exact_banzhaf_table(const TruthTableGame& table,
                                const ExactOptions& opts = {});

// Features whose bit never changes the outcome, i.e. swing count zero.
std::vector<int> find_dummies(const Game& game, const ExactOptions& opts = {});

}  // namespace banzhaf
