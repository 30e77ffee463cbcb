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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multispace/linalg.hpp"

namespace msp {

using BigCount = boost::multiprecision::cpp_int;

// A multispace over F_q^n: every vector of `underlying` with multiplicity
// q^height. rank = dim + height, total size q^rank.
class Multispace {
 public:
  Multispace(Subspace underlying, std::size_t height)
      : underlying_(std::move(underlying)), height_(height) {}

  static Multispace bottom(const Field& field, std::size_t n) {
    return Multispace(Subspace::zero(field, n), 0);
  }

  const Subspace& underlying() const { return underlying_; }
  std::size_t height() const { return height_; }
  std::size_t dim() const { return underlying_.dim(); }
  std::size_t rank() const { return underlying_.dim() + height_; }
  const Field& field() const { return underlying_.field(); }
  std::size_t ambient_dim() const { return underlying_.ambient_dim(); }

  std::uint64_t hash() const { return underlying_.hash() * 31 + height_; }

  bool operator==(const Multispace& o) const {
    return height_ == o.height_ && underlying_ == o.underlying_;
  }
  bool operator!=(const Multispace& o) const { return !(*this == o); }
  // Ascending rank, then dimension, then subspace order.
  bool operator<(const Multispace& o) const;

 private:
  Subspace underlying_;
  std::size_t height_;
};

struct MultispaceHash {
  std::size_t operator()(const Multispace& w) const { return w.hash(); }
};

Multispace mspan(const VectorMultiset& b);

// Literal multiplicity count over all q^|b| coefficient tuples, keyed by
// vector index (FqVector::index). Throws kLimitExceeded when q^|b| > limit.
std::map<std::uint64_t, BigCount> multiplicity_oracle(const VectorMultiset& b,
                                                      std::uint64_t limit = 1ull << 20);

Multispace meet(const Multispace& a, const Multispace& b);
Multispace join(const Multispace& a, const Multispace& b);
std::size_t distance(const Multispace& a, const Multispace& b);

// The two summands of the distance: subspace distance of the underlying
// spaces and the height difference.
struct DistanceParts {
  std::size_t total;
  std::size_t underlying;
  std::size_t height;
};
DistanceParts distance_parts(const Multispace& a, const Multispace& b);

bool multiset_leq(const Multispace& a, const Multispace& b);

BigCount gaussian_binomial(long long n, long long k, std::uint64_t q);
BigCount count_multispaces(std::size_t n, std::size_t m, std::uint64_t q);
// kRankZero for the bottom element.
BigCount count_covered(const Multispace& w);
BigCount count_covering(const Multispace& w, std::size_t n);

// All of M_q(n, m): ascending dimension, then subspace enumeration order.
std::vector<Multispace> enumerate_multispaces(const Field& field, std::size_t n,
                                              std::size_t m,
                                              std::uint64_t limit = kDefaultEnumerationLimit);

// The union of M_q(n, j) for j <= m_max, indexed, with its cover relation.
class Lattice {
 public:
  Lattice(Field field, std::size_t n, std::size_t m_max,
          std::uint64_t limit = kDefaultEnumerationLimit);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t max_rank() const { return m_max_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Multispace>& elements() const { return elements_; }
  const Multispace& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Multispace& w) const;

  // Cover pairs (lower, upper) as element indices, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const {
    return edges_;
  }
  const std::vector<std::size_t>& covers_of(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& covered_by(std::size_t i) const { return down_[i]; }

  // Shortest path lengths in the undirected Hasse diagram from `source`.
  std::vector<std::size_t> hasse_bfs(std::size_t source) const;

 private:
  Field field_;
  std::size_t n_;
  std::size_t m_max_;
  std::vector<Multispace> elements_;
  std::unordered_map<Multispace, std::size_t, MultispaceHash> index_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
};

std::vector<std::pair<Multispace, Multispace>> hasse_edges(
    const Field& field, std::size_t n, std::size_t m_max,
    std::uint64_t limit = kDefaultEnumerationLimit);

// Undirected simple graph on M_q(n, m), edges between multispaces at
// distance 2.
struct Graph {
  std::vector<Multispace> vertices;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted neighbour lists

  std::size_t edge_count() const;
  std::vector<std::size_t> bfs(std::size_t source) const;  // SIZE_MAX if unreachable
};

Graph gamma_graph(const Field& field, std::size_t n, std::size_t m,
                  std::uint64_t limit = kDefaultEnumerationLimit);

// First pair whose intersection numbers disagree with an earlier pair at the
// same graph distance.
struct RegularityWitness {
  std::size_t u;
  std::size_t v;
  std::size_t graph_distance;
  std::string which;  // "a", "b", "c" or "disconnected"
  std::size_t expected;
  std::size_t found;
};

struct RegularityVerdict {
  bool distance_regular;
  std::optional<RegularityWitness> witness;
  std::size_t diameter;
  std::vector<std::size_t> intersection_b;  // b_0..b_{D-1} when regular
  std::vector<std::size_t> intersection_c;  // c_1..c_D when regular
};

RegularityVerdict is_distance_regular(const Graph& g);

}  // namespace msp
