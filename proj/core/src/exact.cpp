// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "banzhaf/errors.hpp"

namespace banzhaf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

int resolve_cap(const ExactOptions& opts) {
  return opts.cap > 0 ? opts.cap : default_exact_cap();
}

void check_cap(int n, int cap) {
  if (n > cap)
    throw CapacityError(
        "exhaustive enumeration over " + std::to_string(n) +
        " features exceeds the cap of " + std::to_string(cap) +
        "; raise it with ExactOptions::cap, --exact-cap, or BANZHAF_EXACT_CAP");
}

// Runs fn(chunk_index, begin, end) over [0, total) split into `parts`
// contiguous ranges. Chunk boundaries and count depend only on `total` and
// `parts`, so per-chunk results can be reduced in a fixed order.
template <typename Fn>
void parallel_chunks(std::uint64_t total, int parts, Fn&& fn) {
  const auto nparts = static_cast<std::uint64_t>(std::max(parts, 1));
  const std::uint64_t chunk = (total + nparts - 1) / nparts;
  std::vector<std::thread> workers;
  for (std::uint64_t c = 0; c < nparts; ++c) {
    const std::uint64_t begin = c * chunk;
    if (begin >= total) break;
    const std::uint64_t end = std::min(total, begin + chunk);
    workers.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
  for (auto& w : workers) w.join();
}

// Bit positions p in a word with bit i of p clear, for i < 6.
constexpr std::uint64_t kLowBitPattern[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

// Swings of feature i within a word-aligned range [wbegin, wend): counts
// masks m with bit i clear whose outcome differs from m | 2^i.
std::uint64_t swing_scan_range(const std::vector<std::uint64_t>& words, int i,
                               std::uint64_t wbegin, std::uint64_t wend) {
  std::uint64_t count = 0;
  if (i < 6) {
    const int shift = 1 << i;
    const std::uint64_t pattern = kLowBitPattern[i];
    for (std::uint64_t w = wbegin; w < wend; ++w)
      count += std::popcount((words[w] ^ (words[w] >> shift)) & pattern);
  } else {
    // Bit i of the mask is bit (i - 6) of the word index.
    const std::uint64_t stride = std::uint64_t{1} << (i - 6);
    for (std::uint64_t w = wbegin; w < wend; ++w)
      if (!(w & stride))
        count += std::popcount(words[w] ^ words[w + stride]);
  }
  return count;
}

std::vector<std::uint64_t> swing_counts(const TruthTableGame& table,
                                        int threads) {
  const int n = table.n_features();
  const auto& words = table.words();
  std::vector<std::uint64_t> swings(n, 0);
  if (words.size() == 1) {
    for (int i = 0; i < n; ++i) swings[i] = swing_scan_range(words, i, 0, 1);
    return swings;
  }
  const int workers = std::min<int>(threads, static_cast<int>(words.size()));
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> partial(workers, 0);
    parallel_chunks(words.size(), workers,
                    [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
                      partial[c] = swing_scan_range(words, i, begin, end);
                    });
    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;  // fixed chunk order
    swings[i] = total;
  }
  return swings;
}

ExactResult result_from_swings(int n, std::vector<std::uint64_t> swings,
                               std::uint64_t evaluations) {
  ExactResult r;
  r.n = n;
  r.swing_counts = std::move(swings);
  r.indices.resize(n);
  r.evaluations = evaluations;
  for (int i = 0; i < n; ++i) {
    r.indices[i] = std::ldexp(static_cast<double>(r.swing_counts[i]), -(n - 1));
    if (r.swing_counts[i] == 0) r.dummies.push_back(i);
  }
  return r;
}

}  // namespace

int default_exact_cap() {
  if (const char* env = std::getenv("BANZHAF_EXACT_CAP")) {
    const int v = std::atoi(env);
    if (v >= 1 && v <= kMaxFeatures) return v;
  }
  return 26;
}

TruthTableGame build_truth_table(const Game& game, const ExactOptions& opts) {
  const int n = game.n_features();
  check_cap(n, resolve_cap(opts));

  if (n < 6) {
    std::uint64_t word = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      if (game.evaluate({m, n})) word |= std::uint64_t{1} << m;
    return TruthTableGame(n, {word});
  }

  std::vector<std::uint64_t> words(TruthTableGame::word_count(n), 0);
  const int workers = std::min<int>(resolve_threads(opts.threads),
                                    static_cast<int>(words.size()));
  // Chunks are word-aligned, so no two workers touch the same word.
  parallel_chunks(words.size(), workers,
                  [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t w = begin; w < end; ++w) {
                      std::uint64_t value = 0;
                      const std::uint64_t base = w << 6;
                      for (int b = 0; b < 64; ++b)
                        if (game.evaluate({base | static_cast<std::uint64_t>(b), n}))
                          value |= std::uint64_t{1} << b;
                      words[w] = value;
                    }
                  });
  return TruthTableGame(n, std::move(words));
}

ExactResult exact_banzhaf_table(const TruthTableGame& table,
                                const ExactOptions& opts) {
  const auto start = Clock::now();
  const int n = table.n_features();
  check_cap(n, resolve_cap(opts));
  auto result = result_from_swings(
      n, swing_counts(table, resolve_threads(opts.threads)), 0);
  result.runtime_ms = ms_since(start);
  return result;
}

ExactResult exact_banzhaf(const Game& game, const ExactOptions& opts) {
  const auto start = Clock::now();
  if (const auto* table = dynamic_cast<const TruthTableGame*>(&game))
    return exact_banzhaf_table(*table, opts);
  TruthTableGame table = build_truth_table(game, opts);
  auto result = exact_banzhaf_table(table, opts);
  result.evaluations = table.table_size();
  result.runtime_ms = ms_since(start);
  return result;
}

std::vector<int> find_dummies(const Game& game, const ExactOptions& opts) {
  return exact_banzhaf(game, opts).dummies;
}

}  // namespace banzhaf
