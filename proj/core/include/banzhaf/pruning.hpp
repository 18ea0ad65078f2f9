// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "banzhaf/exact.hpp"
#include "banzhaf/models.hpp"

namespace banzhaf {

struct VerificationRecord {
  std::string mode;  // "exhaustive" or "sampled"
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::uint64_t> seed;  // sampled mode only
};

struct PruneCertificate {
  std::vector<int> pruned;  // sorted original indices
  std::vector<int> kept;    // ascending; position = new index
  VerificationRecord verification;
  std::string model_hash;
};

// The original game with a set of features pinned to 0. Evaluates reduced
// coalitions over the kept features by embedding them back into the original
// index space. Pinning works uniformly for every Game type; weight-level
// shrinking below is available where removal is trivially sound.
class PrunedGame final : public Game {
 public:
  PrunedGame(std::shared_ptr<const Game> base, std::vector<int> dropped);

  int n_features() const override { return static_cast<int>(kept_.size()); }
  Outcome evaluate(Coalition reduced) const override;

  // reduced-space mask -> original mask (dropped features 0).
  std::uint64_t embed(std::uint64_t reduced_mask) const;
  // original mask -> reduced-space mask (dropped bits discarded).
  std::uint64_t project(std::uint64_t original_mask) const;

  const std::vector<int>& kept() const { return kept_; }
  const std::vector<int>& dropped() const { return dropped_; }
  const Game& base() const { return *base_; }

 private:
  std::shared_ptr<const Game> base_;
  std::vector<int> dropped_;
  std::vector<int> kept_;
};

// Pins an explicit feature set to 0 (no dummy detection). The certificate
// hook for the negative control: pruning a non-dummy is representable, and
// verification will then report mismatches.
std::shared_ptr<PrunedGame> prune_features(std::shared_ptr<const Game> game,
                                           std::vector<int> features);

// Detects dummy features exactly (exhaustive swing counts; a sampled zero
// estimate cannot certify dummyhood) and prunes them. The certificate's
// verification record is empty until verify_lossless fills it.
std::pair<std::shared_ptr<PrunedGame>, PruneCertificate> prune_dummies(
    std::shared_ptr<const Game> game, const ExactOptions& opts = {},
    std::string model_hash = "");

// Compares the original game against the pruned game on the projected
// coalition, over all 2^n masks. Zero mismatches is a proof of losslessness.
VerificationRecord verify_lossless_exhaustive(const Game& original,
                                              const PrunedGame& pruned,
                                              const ExactOptions& opts = {});

// Same comparison over k uniformly sampled masks: evidence, not proof.
VerificationRecord verify_lossless_sampled(const Game& original,
                                           const PrunedGame& pruned,
                                           std::uint64_t k, std::uint64_t seed);

// Weight-level shrinks. Dropping a column is exactly pinning it to 0 for
// these model classes, so the reduced model is equivalent by construction.
WeightedVotingGame shrink_model(const WeightedVotingGame& game,
                                const std::vector<int>& drop);
LinearThresholdGame shrink_model(const LinearThresholdGame& game,
                                 const std::vector<int>& drop);

}  // namespace banzhaf
