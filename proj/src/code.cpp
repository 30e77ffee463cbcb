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

#include "multispace/code.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "multispace/rng.hpp"

namespace msp {

std::vector<Multispace> code_space(const Field& field, std::size_t n, std::size_t m_max,
                                   std::uint64_t limit) {
  check_enumeration_limit(field, n, limit);
  std::vector<Multispace> out;
  for (std::size_t r = 0; r <= m_max; ++r) {
    auto layer = enumerate_multispaces(field, n, r, limit);
    std::move(layer.begin(), layer.end(), std::back_inserter(out));
  }
  return out;
}

DistanceTable::DistanceTable(std::vector<Multispace> elements)
    : elements_(std::move(elements)) {
  struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const { return s.hash(); }
  };
  std::unordered_map<Subspace, std::uint32_t, SubspaceHash> ids;
  std::vector<const Subspace*> distinct;
  subspace_id_.reserve(elements_.size());
  for (const auto& w : elements_) {
    auto [it, inserted] = ids.emplace(w.underlying(), static_cast<std::uint32_t>(distinct.size()));
    if (inserted) distinct.push_back(&w.underlying());
    subspace_id_.push_back(it->second);
  }
  subspace_count_ = distinct.size();
  subspace_dim_.resize(subspace_count_);
  intersection_dim_.assign(subspace_count_ * subspace_count_, 0);
  for (std::size_t a = 0; a < subspace_count_; ++a) {
    subspace_dim_[a] = distinct[a]->dim();
    for (std::size_t b = a; b < subspace_count_; ++b) {
      const auto d = static_cast<std::uint8_t>(
          a == b ? distinct[a]->dim() : subspace_intersect(*distinct[a], *distinct[b]).dim());
      intersection_dim_[a * subspace_count_ + b] = d;
      intersection_dim_[b * subspace_count_ + a] = d;
    }
  }
}

std::size_t DistanceTable::operator()(std::size_t i, std::size_t j) const {
  const std::size_t a = subspace_id_[i], b = subspace_id_[j];
  const std::size_t hi = elements_[i].height(), hj = elements_[j].height();
  return subspace_dim_[a] + subspace_dim_[b] -
         2 * std::size_t{intersection_dim_[a * subspace_count_ + b]} +
         (hi > hj ? hi - hj : hj - hi);
}

MultispaceCode::MultispaceCode(Field field, std::size_t n, std::size_t m_max,
                               std::vector<Multispace> codewords,
                               std::size_t design_distance)
    : field_(std::move(field)), n_(n), m_max_(m_max), design_distance_(design_distance) {
  for (auto& w : codewords) add(std::move(w));
}

void MultispaceCode::check(const Multispace& w) const {
  require_same_field(field_, w.field());
  if (w.ambient_dim() != n_)
    throw Error(ErrorCode::kDimensionMismatch, "codeword ambient dimension differs");
  if (w.rank() > m_max_)
    throw Error(ErrorCode::kConfigInvalid,
                "codeword of rank " + std::to_string(w.rank()) + " exceeds m_max " +
                    std::to_string(m_max_));
}

void MultispaceCode::add(Multispace w) {
  check(w);
  for (const auto& c : codewords_) {
    const std::size_t d = distance(c, w);
    if (d == 0) throw Error(ErrorCode::kConfigInvalid, "duplicate codeword");
    min_dist_ = std::min(min_dist_, d);
  }
  codewords_.push_back(std::move(w));
}

std::size_t min_distance(const MultispaceCode& code) {
  if (code.size() < 2)
    throw Error(ErrorCode::kTooFewCodewords,
                "minimum distance needs two codewords, code has " + std::to_string(code.size()));
  std::size_t best = kInfiniteDistance;
  const auto& words = code.codewords();
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, distance(words[i], words[j]));
  return best;
}

namespace {

std::vector<std::size_t> greedy_indices(const DistanceTable& table, std::size_t d_min,
                                        std::uint64_t seed) {
  std::vector<std::size_t> order(table.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  SplitMix64 rng(seed);
  rng.shuffle(order.begin(), order.end());

  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    const bool fits = std::all_of(kept.begin(), kept.end(),
                                  [&](std::size_t k) { return table(i, k) >= d_min; });
    if (fits) kept.push_back(i);
  }
  return kept;
}

MultispaceCode code_from(const DistanceTable& table, const std::vector<std::size_t>& kept,
                         const Field& field, std::size_t n, std::size_t m_max,
                         std::size_t d_min) {
  std::vector<Multispace> words;
  words.reserve(kept.size());
  for (std::size_t i : kept) words.push_back(table.elements()[i]);
  return MultispaceCode(field, n, m_max, std::move(words), d_min);
}

}  // namespace

MultispaceCode greedy_code(const Field& field, std::size_t n, std::size_t m_max,
                           std::size_t d_min, std::uint64_t seed, std::uint64_t limit) {
  return greedy_sweep(field, n, m_max, d_min, seed, 1, limit).code;
}

GreedySweep greedy_sweep(const Field& field, std::size_t n, std::size_t m_max,
                         std::size_t d_min, std::uint64_t first_seed, std::uint64_t seeds,
                         std::uint64_t limit) {
  if (d_min == 0) throw Error(ErrorCode::kConfigInvalid, "d_min must be >= 1");
  if (seeds == 0) throw Error(ErrorCode::kConfigInvalid, "seed count must be >= 1");
  DistanceTable table(code_space(field, n, m_max, limit));
  std::vector<std::size_t> best;
  std::uint64_t best_seed = first_seed;
  for (std::uint64_t k = 0; k < seeds; ++k) {
    auto kept = greedy_indices(table, d_min, first_seed + k);
    if (k == 0 || kept.size() > best.size()) {
      best = std::move(kept);
      best_seed = first_seed + k;
    }
  }
  return {code_from(table, best, field, n, m_max, d_min), best_seed};
}

namespace {

// Maximum clique on at most 64 vertices; greedy colouring bound.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::uint64_t> adjacency)
      : adj_(std::move(adjacency)) {}

  std::vector<std::size_t> solve() {
    const std::size_t n = adj_.size();
    const std::uint64_t all = n == 64 ? ~0ull : ((1ull << n) - 1);
    expand(all);
    return best_;
  }

 private:
  void expand(std::uint64_t candidates) {
    if (candidates == 0) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    std::vector<std::pair<std::size_t, std::size_t>> coloured;  // (vertex, colour)
    std::uint64_t uncoloured = candidates;
    std::size_t colour = 0;
    while (uncoloured) {
      ++colour;
      std::uint64_t independent = uncoloured;
      while (independent) {
        const auto v = static_cast<std::size_t>(std::countr_zero(independent));
        independent &= ~(1ull << v);
        independent &= ~adj_[v];
        uncoloured &= ~(1ull << v);
        coloured.emplace_back(v, colour);
      }
    }
    for (std::size_t k = coloured.size(); k-- > 0;) {
      const auto [v, c] = coloured[k];
      if (current_.size() + c <= best_.size()) return;
      current_.push_back(v);
      expand(candidates & adj_[v]);
      current_.pop_back();
      candidates &= ~(1ull << v);
    }
  }

  std::vector<std::uint64_t> adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

MultispaceCode exhaustive_optimal_code(const Field& field, std::size_t n, std::size_t m_max,
                                       std::size_t d_min, std::uint64_t limit) {
  if (d_min == 0) throw Error(ErrorCode::kConfigInvalid, "d_min must be >= 1");
  std::vector<Multispace> space = code_space(field, n, m_max, limit);
  if (space.size() > kMaxOptimalSpace)
    throw Error(ErrorCode::kLimitExceeded,
                "code space has " + std::to_string(space.size()) + " elements, clique search "
                "handles at most " + std::to_string(kMaxOptimalSpace));
  DistanceTable table(std::move(space));
  std::vector<std::uint64_t> adjacency(table.size(), 0);
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j)
      if (i != j && table(i, j) >= d_min) adjacency[i] |= 1ull << j;
  std::vector<std::size_t> clique = CliqueSearch(std::move(adjacency)).solve();
  std::sort(clique.begin(), clique.end());
  std::vector<Multispace> words;
  for (std::size_t i : clique) words.push_back(table.elements()[i]);
  return MultispaceCode(field, n, m_max, std::move(words), d_min);
}

BallProfile ball_size(const Multispace& center, std::size_t radius, std::size_t m_max,
                      std::uint64_t limit) {
  BigCount size = 0;
  for (const auto& w : code_space(center.field(), center.ambient_dim(), m_max, limit))
    if (distance(center, w) <= radius) ++size;
  return {center, radius, size};
}

BigCount sphere_packing_bound(const Field& field, std::size_t n, std::size_t m_max,
                              std::size_t d_min, std::uint64_t limit) {
  if (d_min == 0) throw Error(ErrorCode::kConfigInvalid, "d_min must be >= 1");
  const std::size_t radius = (d_min - 1) / 2;
  DistanceTable table(code_space(field, n, m_max, limit));
  std::size_t smallest = table.size();
  for (std::size_t c = 0; c < table.size(); ++c) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < table.size(); ++j)
      if (table(c, j) <= radius) ++count;
    smallest = std::min(smallest, count);
  }
  return BigCount(table.size()) / smallest;
}

Decoded decode(const MultispaceCode& code, const Multispace& received) {
  if (code.size() == 0) throw Error(ErrorCode::kEmptyCode, "cannot decode with an empty code");
  std::size_t best = 0, best_distance = kInfiniteDistance;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const std::size_t d = distance(code.codewords()[i], received);
    if (d < best_distance) {
      best = i;
      best_distance = d;
    }
  }
  return {code.codewords()[best], best, best_distance};
}

BigCount codespace_growth(std::uint64_t q, std::size_t n, std::size_t m) {
  BigCount total = 0;
  for (std::size_t j = 0; j <= m; ++j) total += count_multispaces(n, j, q);
  return total;
}

}  // namespace msp
