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

#include "multispace/channel.hpp"

#include <algorithm>

namespace msp {

std::string channel_mode_name(ChannelMode mode) {
  switch (mode) {
    case ChannelMode::kFullRank: return "full-rank";
    case ChannelMode::kDeletion: return "deletion";
    case ChannelMode::kRankDeficient: return "rank-deficient";
    case ChannelMode::kCompound: return "compound";
  }
  return "unknown";
}

ChannelMode parse_channel_mode(const std::string& name) {
  for (auto mode : {ChannelMode::kFullRank, ChannelMode::kDeletion,
                    ChannelMode::kRankDeficient, ChannelMode::kCompound})
    if (channel_mode_name(mode) == name) return mode;
  throw Error(ErrorCode::kConfigInvalid, "unknown channel mode '" + name + "'");
}

VectorMultiset apply_transform(const VectorMultiset& b, const FqMatrix& t) {
  require_same_field(b.field(), t.field());
  if (t.rows() != b.size())
    throw Error(ErrorCode::kShapeMismatch,
                "transform has " + std::to_string(t.rows()) + " rows for " +
                    std::to_string(b.size()) + " vectors");
  const FqMatrix out = t.transpose() * b.as_matrix();
  VectorMultiset result(b.field(), b.ambient_dim());
  for (std::size_t j = 0; j < out.rows(); ++j) result.push_back(out.row_vector(j));
  return result;
}

namespace {

FqMatrix random_matrix(const Field& field, std::size_t rows, std::size_t cols,
                       SplitMix64& rng) {
  std::vector<Elem> data(rows * cols);
  for (auto& x : data) x = static_cast<Elem>(rng.below(field.order()));
  return FqMatrix(field, rows, cols, std::move(data));
}

FqMatrix random_of_full_rank(const Field& field, std::size_t rows, std::size_t cols,
                             SplitMix64& rng) {
  const std::size_t target = std::min(rows, cols);
  for (;;) {
    FqMatrix m = random_matrix(field, rows, cols, rng);
    if (rref(m).rank == target) return m;
  }
}

}  // namespace

FqMatrix random_full_rank(const Field& field, std::size_t m, SplitMix64& rng) {
  return random_of_full_rank(field, m, m, rng);
}

FqMatrix random_rank(const Field& field, std::size_t rows, std::size_t cols, std::size_t r,
                     SplitMix64& rng) {
  if (r > std::min(rows, cols))
    throw Error(ErrorCode::kConfigInvalid,
                "rank " + std::to_string(r) + " impossible for " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  if (r == 0) return FqMatrix(field, rows, cols);
  FqMatrix a = random_of_full_rank(field, rows, r, rng);
  FqMatrix b = random_of_full_rank(field, r, cols, rng);
  FqMatrix product = a * b;
  if (rref(product).rank != r)
    throw Error(ErrorCode::kShapeViolation, "rank of A*B differs from r");
  return product;
}

VectorMultiset generating_multiset(const Multispace& w) {
  VectorMultiset b(w.field(), w.ambient_dim());
  for (std::size_t r = 0; r < w.dim(); ++r) b.push_back(w.underlying().basis().row_vector(r));
  for (std::size_t i = 0; i < w.height(); ++i)
    b.push_back(FqVector::zero(w.field(), w.ambient_dim()));
  return b;
}

VectorMultiset random_generating_multiset(const Multispace& w, SplitMix64& rng) {
  VectorMultiset b = generating_multiset(w);
  return apply_transform(b, random_full_rank(w.field(), b.size(), rng));
}

void TrialSummary::add(const TrialRecord& r) {
  ++trials;
  if (!r.bound_satisfied) ++violations;
  max_distance = std::max(max_distance, r.observed_distance);
  ++histogram[r.observed_distance];
}

FqMatrix channel_transform(const Field& field, std::size_t m, const ChannelConfig& cfg,
                           SplitMix64& rng) {
  const std::size_t s = cfg.s;
  switch (cfg.mode) {
    case ChannelMode::kFullRank:
      return random_full_rank(field, m, rng);
    case ChannelMode::kDeletion:
      if (s > m)
        throw Error(ErrorCode::kConfigInvalid,
                    "cannot delete " + std::to_string(s) + " of " + std::to_string(m) + " vectors");
      return random_rank(field, m, m - s, m - s, rng);
    case ChannelMode::kRankDeficient:
      if (s > m)
        throw Error(ErrorCode::kConfigInvalid,
                    "rank deficiency " + std::to_string(s) + " exceeds " + std::to_string(m));
      return random_rank(field, m, m, m - s, rng);
    case ChannelMode::kCompound: {
      if (2 * s > m)
        throw Error(ErrorCode::kConfigInvalid,
                    "compound channel needs 2s <= m, got s=" + std::to_string(s) +
                        " m=" + std::to_string(m));
      FqMatrix deletion = random_rank(field, m, m - s, m - s, rng);
      FqMatrix deficient = random_rank(field, m - s, m - s, m - 2 * s, rng);
      return deletion * deficient;
    }
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown mode");
}

TrialRecord run_trial(const VectorMultiset& generator, const ChannelConfig& cfg,
                      std::size_t index) {
  SplitMix64 rng = SplitMix64(cfg.seed).split(index);
  const FqMatrix t = channel_transform(generator.field(), generator.size(), cfg, rng);
  TrialRecord rec{index, mspan(generator), mspan(apply_transform(generator, t)),
                  rref(t).rank, 0, std::nullopt, true};
  rec.observed_distance = distance(rec.sent, rec.received);
  switch (cfg.mode) {
    case ChannelMode::kFullRank:
      rec.bound = 0;
      rec.bound_satisfied = rec.received == rec.sent;
      break;
    case ChannelMode::kDeletion:
      rec.bound = cfg.s;
      rec.bound_satisfied = rec.observed_distance == cfg.s;
      break;
    case ChannelMode::kRankDeficient:
      rec.bound = 2 * cfg.s;
      // Containment is of supports: equal-rank multisets ordered by inclusion
      // would have to coincide.
      rec.bound_satisfied = rec.observed_distance <= 2 * cfg.s &&
                            subspace_leq(rec.received.underlying(), rec.sent.underlying()) &&
                            rec.received.rank() == rec.sent.rank();
      break;
    case ChannelMode::kCompound:
      break;
  }
  return rec;
}

TrialSummary run_trials(const VectorMultiset& generator, const ChannelConfig& cfg,
                        std::vector<TrialRecord>* sink) {
  TrialSummary summary;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    TrialRecord rec = run_trial(generator, cfg, i);
    summary.add(rec);
    if (sink) sink->push_back(std::move(rec));
  }
  return summary;
}

TrialSummary run_trials(const Multispace& w, const ChannelConfig& cfg,
                        std::vector<TrialRecord>* sink) {
  if (!cfg.random_generators) return run_trials(generating_multiset(w), cfg, sink);
  SplitMix64 rng = SplitMix64(cfg.seed ^ 0x6a09e667f3bcc909ull);
  return run_trials(random_generating_multiset(w, rng), cfg, sink);
}

EndToEndSummary end_to_end(const MultispaceCode& code, const ChannelConfig& cfg,
                           std::vector<TrialRecord>* sink) {
  if (code.size() == 0) throw Error(ErrorCode::kConfigInvalid, "empty code");
  std::size_t needed = 0;
  if (cfg.mode == ChannelMode::kDeletion || cfg.mode == ChannelMode::kRankDeficient)
    needed = cfg.s;
  else if (cfg.mode == ChannelMode::kCompound)
    needed = 2 * cfg.s;
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < code.size(); ++i)
    if (code.codewords()[i].rank() >= needed) eligible.push_back(i);
  if (eligible.empty())
    throw Error(ErrorCode::kConfigInvalid,
                "no codeword has rank >= " + std::to_string(needed) + " for s=" +
                    std::to_string(cfg.s));

  EndToEndSummary summary;
  const std::size_t min_dist = code.min_dist();
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng = SplitMix64(cfg.seed).split(i);
    const Multispace& sent = code.codewords()[eligible[rng.below(eligible.size())]];
    VectorMultiset generator =
        cfg.random_generators ? random_generating_multiset(sent, rng) : generating_multiset(sent);
    const FqMatrix t = channel_transform(code.field(), generator.size(), cfg, rng);
    const Multispace received = mspan(apply_transform(generator, t));
    const std::size_t d = distance(sent, received);

    std::optional<std::size_t> bound;
    bool channel_ok = true;
    switch (cfg.mode) {
      case ChannelMode::kFullRank:
        bound = 0;
        channel_ok = received == sent;
        break;
      case ChannelMode::kDeletion:
        bound = cfg.s;
        channel_ok = d == cfg.s;
        break;
      case ChannelMode::kRankDeficient:
        bound = 2 * cfg.s;
        channel_ok = d <= 2 * cfg.s &&
                     subspace_leq(received.underlying(), sent.underlying()) &&
                     received.rank() == sent.rank();
        break;
      case ChannelMode::kCompound:
        break;
    }
    if (sink)
      sink->push_back(TrialRecord{i, sent, received, rref(t).rank, d, bound, channel_ok});
    const bool correct = decode(code, received).codeword == sent;
    const bool guaranteed =
        bound && (min_dist == kInfiniteDistance || 2 * *bound < min_dist);

    ++summary.trials;
    ++summary.histogram[d];
    summary.max_distance = std::max(summary.max_distance, d);
    if (!correct) ++summary.block_errors;
    if (guaranteed) {
      ++summary.guaranteed_trials;
      if (!correct) ++summary.guaranteed_errors;
    }
    if (!channel_ok || (guaranteed && !correct)) ++summary.violations;
  }
  return summary;
}

}  // namespace msp
