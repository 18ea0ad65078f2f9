// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace banzhaf {

// The project-wide random source is splitmix64 (Steele, Lea & Flood's
// SplittableRandom finalizer). It is tiny, has a published fixed algorithm,
// and splits cleanly into independent streams, so any run is reproducible
// from (algorithm name, seed) alone. Reports record the name.
inline constexpr const char* kRngName = "splitmix64";

struct SplitMix64 {
  std::uint64_t state = 0;

  constexpr explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double next_unit() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }
};

// Independent stream for (seed, stream index): estimation loops are keyed by
// feature, never by scheduling order, which keeps parallel runs and serial
// runs bit-identical.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
  g.next();
  return g;
}

}  // namespace banzhaf
