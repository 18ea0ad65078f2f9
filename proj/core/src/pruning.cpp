// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "banzhaf/pruning.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "banzhaf/errors.hpp"
#include "banzhaf/rng.hpp"

namespace banzhaf {

namespace {

std::vector<int> normalize_drop_list(std::vector<int> features, int n,
                                     bool allow_all) {
  std::sort(features.begin(), features.end());
  features.erase(std::unique(features.begin(), features.end()),
                 features.end());
  for (int f : features)
    if (f < 0 || f >= n)
      throw ArgumentError("feature index " + std::to_string(f) +
                          " is out of range for " + std::to_string(n) +
                          " features");
  if (!allow_all && static_cast<int>(features.size()) >= n)
    throw ArgumentError("cannot prune all " + std::to_string(n) +
                        " features");
  return features;
}

}  // namespace

PrunedGame::PrunedGame(std::shared_ptr<const Game> base,
                       std::vector<int> dropped)
    : base_(std::move(base)) {
  if (!base_) throw ArgumentError("pruned game needs a base game");
  const int n = base_->n_features();
  dropped_ = normalize_drop_list(std::move(dropped), n, /*allow_all=*/false);
  kept_.reserve(n - dropped_.size());
  auto it = dropped_.begin();
  for (int f = 0; f < n; ++f) {
    if (it != dropped_.end() && *it == f) {
      ++it;
      continue;
    }
    kept_.push_back(f);
  }
}

std::uint64_t PrunedGame::embed(std::uint64_t reduced_mask) const {
  std::uint64_t original = 0;
  for (std::size_t r = 0; r < kept_.size(); ++r)
    if (reduced_mask & (std::uint64_t{1} << r))
      original |= std::uint64_t{1} << kept_[r];
  return original;
}

std::uint64_t PrunedGame::project(std::uint64_t original_mask) const {
  std::uint64_t reduced = 0;
  for (std::size_t r = 0; r < kept_.size(); ++r)
    if (original_mask & (std::uint64_t{1} << kept_[r]))
      reduced |= std::uint64_t{1} << r;
  return reduced;
}

Outcome PrunedGame::evaluate(Coalition reduced) const {
  return base_->evaluate({embed(reduced.mask), base_->n_features()});
}

std::shared_ptr<PrunedGame> prune_features(std::shared_ptr<const Game> game,
                                           std::vector<int> features) {
  return std::make_shared<PrunedGame>(std::move(game), std::move(features));
}

std::pair<std::shared_ptr<PrunedGame>, PruneCertificate> prune_dummies(
    std::shared_ptr<const Game> game, const ExactOptions& opts,
    std::string model_hash) {
  if (!game) throw ArgumentError("prune_dummies needs a game");
  const ExactResult exact = exact_banzhaf(*game, opts);
  if (static_cast<int>(exact.dummies.size()) >= game->n_features())
    throw ArgumentError(
        "every feature is a dummy (the game is constant); nothing to keep");

  auto pruned = std::make_shared<PrunedGame>(game, exact.dummies);
  PruneCertificate cert;
  cert.pruned = pruned->dropped();
  cert.kept = pruned->kept();
  cert.model_hash = std::move(model_hash);
  return {std::move(pruned), std::move(cert)};
}

VerificationRecord verify_lossless_exhaustive(const Game& original,
                                              const PrunedGame& pruned,
                                              const ExactOptions& opts) {
  const int n = original.n_features();
  const int cap = opts.cap > 0 ? opts.cap : default_exact_cap();
  if (n > cap)
    throw CapacityError("exhaustive verification over " + std::to_string(n) +
                        " features exceeds the cap of " + std::to_string(cap) +
                        " (2^n coalitions); use sampled verification");

  VerificationRecord record;
  record.mode = "exhaustive";
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Outcome a = original.evaluate({mask, n});
    const Outcome b =
        pruned.evaluate({pruned.project(mask), pruned.n_features()});
    if (a != b) ++record.mismatches;
  }
  record.checks = count;
  return record;
}

VerificationRecord verify_lossless_sampled(const Game& original,
                                           const PrunedGame& pruned,
                                           std::uint64_t k,
                                           std::uint64_t seed) {
  if (k == 0) throw ArgumentError("sample count must be at least 1");
  const int n = original.n_features();
  VerificationRecord record;
  record.mode = "sampled";
  record.seed = seed;
  SplitMix64 g = stream_for(seed, 0);
  const std::uint64_t all = full_mask(n);
  for (std::uint64_t s = 0; s < k; ++s) {
    const std::uint64_t mask = g.next() & all;
    const Outcome a = original.evaluate({mask, n});
    const Outcome b =
        pruned.evaluate({pruned.project(mask), pruned.n_features()});
    if (a != b) ++record.mismatches;
  }
  record.checks = k;
  return record;
}

WeightedVotingGame shrink_model(const WeightedVotingGame& game,
                                const std::vector<int>& drop) {
  const auto dropped = normalize_drop_list(
      std::vector<int>(drop), game.n_features(), /*allow_all=*/false);
  std::vector<std::int64_t> weights;
  weights.reserve(game.weights().size() - dropped.size());
  auto it = dropped.begin();
  for (int f = 0; f < game.n_features(); ++f) {
    if (it != dropped.end() && *it == f) {
      ++it;
      continue;
    }
    weights.push_back(game.weights()[f]);
  }
  return WeightedVotingGame(std::move(weights), game.quota());
}

LinearThresholdGame shrink_model(const LinearThresholdGame& game,
                                 const std::vector<int>& drop) {
  const auto dropped = normalize_drop_list(
      std::vector<int>(drop), game.n_features(), /*allow_all=*/false);
  std::vector<std::string> weights;
  weights.reserve(game.weight_strings().size() - dropped.size());
  auto it = dropped.begin();
  for (int f = 0; f < game.n_features(); ++f) {
    if (it != dropped.end() && *it == f) {
      ++it;
      continue;
    }
    weights.push_back(game.weight_strings()[f]);
  }
  return LinearThresholdGame(std::move(weights), game.bias_string(),
                             game.kind());
}

}  // namespace banzhaf
