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
#include <limits>
#include <vector>

#include "multispace/multispace.hpp"

namespace msp {

// Minimum distance of a code with fewer than two codewords.
inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

// Largest code space handled by the exact clique search.
inline constexpr std::size_t kMaxOptimalSpace = 64;

// The code space: every multispace of rank <= m_max, ordered by rank, then
// dimension, then subspace enumeration order.
std::vector<Multispace> code_space(const Field& field, std::size_t n, std::size_t m_max,
                                   std::uint64_t limit = kDefaultEnumerationLimit);

// Pairwise distances over a list of multispaces. Intersections are computed
// once per pair of distinct underlying subspaces.
class DistanceTable {
 public:
  explicit DistanceTable(std::vector<Multispace> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Multispace>& elements() const { return elements_; }
  std::size_t operator()(std::size_t i, std::size_t j) const;

 private:
  std::vector<Multispace> elements_;
  std::vector<std::uint32_t> subspace_id_;
  std::vector<std::size_t> subspace_dim_;
  std::vector<std::uint8_t> intersection_dim_;  // row-major, subspaces x subspaces
  std::size_t subspace_count_ = 0;
};

class MultispaceCode {
 public:
  // Throws kConfigInvalid on duplicate codewords or ranks above m_max.
  MultispaceCode(Field field, std::size_t n, std::size_t m_max,
                 std::vector<Multispace> codewords = {}, std::size_t design_distance = 0);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t max_rank() const { return m_max_; }
  // The d_min the code was built for (0 if unspecified).
  std::size_t design_distance() const { return design_distance_; }
  const std::vector<Multispace>& codewords() const { return codewords_; }
  std::size_t size() const { return codewords_.size(); }
  // kInfiniteDistance when size() <= 1.
  std::size_t min_dist() const { return min_dist_; }

  void add(Multispace w);

 private:
  void check(const Multispace& w) const;

  Field field_;
  std::size_t n_;
  std::size_t m_max_;
  std::size_t design_distance_;
  std::vector<Multispace> codewords_;
  std::size_t min_dist_ = kInfiniteDistance;
};

// Exact pairwise minimum; kTooFewCodewords when the code has < 2 words.
std::size_t min_distance(const MultispaceCode& code);

// Visits the code space in a seeded shuffle, keeping each element at distance
// >= d_min from everything kept so far.
MultispaceCode greedy_code(const Field& field, std::size_t n, std::size_t m_max,
                           std::size_t d_min, std::uint64_t seed,
                           std::uint64_t limit = kDefaultEnumerationLimit);

struct GreedySweep {
  MultispaceCode code;
  std::uint64_t seed;
};

// Largest greedy code over seeds first_seed, ..., first_seed + seeds - 1;
// ties keep the earliest seed.
GreedySweep greedy_sweep(const Field& field, std::size_t n, std::size_t m_max,
                         std::size_t d_min, std::uint64_t first_seed, std::uint64_t seeds,
                         std::uint64_t limit = kDefaultEnumerationLimit);

// Maximum code via branch-and-bound max clique on the graph of pairs at
// distance >= d_min. The code space must have at most kMaxOptimalSpace
// elements (kLimitExceeded).
MultispaceCode exhaustive_optimal_code(const Field& field, std::size_t n, std::size_t m_max,
                                       std::size_t d_min,
                                       std::uint64_t limit = kDefaultEnumerationLimit);

struct BallProfile {
  Multispace center;
  std::size_t radius;
  BigCount size;
};

// Number of multispaces of rank <= m_max within distance `radius` of center.
BallProfile ball_size(const Multispace& center, std::size_t radius, std::size_t m_max,
                      std::uint64_t limit = kDefaultEnumerationLimit);

// floor(|space| / min over centers of the radius-floor((d_min-1)/2) ball).
BigCount sphere_packing_bound(const Field& field, std::size_t n, std::size_t m_max,
                              std::size_t d_min,
                              std::uint64_t limit = kDefaultEnumerationLimit);

struct Decoded {
  Multispace codeword;
  std::size_t index;
  std::size_t distance;
};

// Nearest codeword; ties go to the earliest codeword. kEmptyCode if empty.
Decoded decode(const MultispaceCode& code, const Multispace& received);

// sum_{j=0}^{m} |M_q(n, j)|
BigCount codespace_growth(std::uint64_t q, std::size_t n, std::size_t m);

}  // namespace msp
