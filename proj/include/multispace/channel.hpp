/* Copyright 2026 The Multispace Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multispace/code.hpp"
#include "multispace/rng.hpp"

namespace msp {

enum class ChannelMode { kFullRank, kDeletion, kRankDeficient, kCompound };

std::string channel_mode_name(ChannelMode mode);
// Accepts "full-rank", "deletion", "rank-deficient", "compound".
ChannelMode parse_channel_mode(const std::string& name);

struct ChannelConfig {
  ChannelMode mode = ChannelMode::kFullRank;
  std::size_t s = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  // Mix the basis-plus-zeros generator through a random invertible matrix
  // before transmission.
  bool random_generators = false;
};

// b'_j = sum_i T[i][j] b_i. T must have |b| rows (kShapeMismatch).
VectorMultiset apply_transform(const VectorMultiset& b, const FqMatrix& t);

// Uniform invertible m x m matrix by rejection.
FqMatrix random_full_rank(const Field& field, std::size_t m, SplitMix64& rng);
// rows x cols matrix of rank exactly r, as A * B with A rows x r and
// B r x cols both of full rank.
FqMatrix random_rank(const Field& field, std::size_t rows, std::size_t cols, std::size_t r,
                     SplitMix64& rng);

// Basis of the underlying space followed by height() zero vectors.
VectorMultiset generating_multiset(const Multispace& w);
// generating_multiset(w) passed through a random invertible transform.
VectorMultiset random_generating_multiset(const Multispace& w, SplitMix64& rng);

struct TrialRecord {
  std::size_t trial = 0;
  Multispace sent;
  Multispace received;
  std::size_t transform_rank = 0;
  std::size_t observed_distance = 0;
  // Exact distance for full-rank and deletion, upper bound for
  // rank-deficient, none for compound.
  std::optional<std::size_t> bound;
  bool bound_satisfied = true;
};

struct TrialSummary {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t max_distance = 0;
  std::map<std::size_t, std::size_t> histogram;  // observed distance -> count

  void add(const TrialRecord& r);
};

// Transform for trial `index` of cfg applied to a generator of size m.
// Throws kConfigInvalid when s does not fit m.
FqMatrix channel_transform(const Field& field, std::size_t m, const ChannelConfig& cfg,
                           SplitMix64& rng);

TrialRecord run_trial(const VectorMultiset& generator, const ChannelConfig& cfg,
                      std::size_t index);

// Runs cfg.trials trials on the generator; every record is passed to `sink`
// when one is given. Trial i uses SplitMix64(cfg.seed).split(i).
TrialSummary run_trials(const VectorMultiset& generator, const ChannelConfig& cfg,
                        std::vector<TrialRecord>* sink = nullptr);
TrialSummary run_trials(const Multispace& w, const ChannelConfig& cfg,
                        std::vector<TrialRecord>* sink = nullptr);

struct EndToEndSummary {
  std::size_t trials = 0;
  std::size_t block_errors = 0;
  // Trials whose channel distance bound is below min_dist / 2.
  std::size_t guaranteed_trials = 0;
  std::size_t guaranteed_errors = 0;
  // Channel bound violations plus decoding failures inside the guarantee.
  std::size_t violations = 0;
  std::size_t max_distance = 0;
  std::map<std::size_t, std::size_t> histogram;

  double block_error_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(block_errors) / static_cast<double>(trials);
  }
};

// Sends uniformly chosen codewords (among those of rank large enough for
// the configured s) through the channel and decodes. Channel records go to
// `sink` when one is given.
EndToEndSummary end_to_end(const MultispaceCode& code, const ChannelConfig& cfg,
                           std::vector<TrialRecord>* sink = nullptr);

}  // namespace msp
