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

#include "multispace/multispace.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <set>

namespace msp {

namespace {

void require_compatible(const Multispace& a, const Multispace& b) {
  require_same_field(a.field(), b.field());
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::kDimensionMismatch,
                "ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                    std::to_string(b.ambient_dim()));
}

BigCount q_power(std::uint64_t q, std::size_t k) {
  BigCount r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= q;
  return r;
}

BigCount geometric_sum(std::uint64_t q, std::size_t terms) {
  BigCount sum = 0, term = 1;
  for (std::size_t i = 0; i < terms; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

}  // namespace

bool Multispace::operator<(const Multispace& o) const {
  if (rank() != o.rank()) return rank() < o.rank();
  if (dim() != o.dim()) return dim() < o.dim();
  return underlying_ < o.underlying_;
}

Multispace mspan(const VectorMultiset& b) {
  Subspace s = span(b);
  const std::size_t height = b.size() - s.dim();
  return Multispace(std::move(s), height);
}

std::map<std::uint64_t, BigCount> multiplicity_oracle(const VectorMultiset& b,
                                                      std::uint64_t limit) {
  const Field& f = b.field();
  const std::size_t m = b.size(), n = b.ambient_dim();
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < m; ++i) {
    tuples *= f.order();
    if (tuples > limit)
      throw Error(ErrorCode::kLimitExceeded,
                  "q^|B| exceeds oracle limit " + std::to_string(limit));
  }
  std::map<std::uint64_t, std::uint64_t> counts;
  std::vector<Elem> alpha(m, 0);
  std::vector<Elem> acc(n, 0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (alpha[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        acc[j] = f.add(acc[j], f.mul(alpha[i], b[i][j]));
    }
    ++counts[FqVector(f, acc).index()];
    for (std::size_t i = 0; i < m; ++i) {
      if (++alpha[i] < f.order()) break;
      alpha[i] = 0;
    }
  }
  std::map<std::uint64_t, BigCount> out;
  for (const auto& [v, c] : counts) out.emplace(v, BigCount(c));
  return out;
}

Multispace meet(const Multispace& a, const Multispace& b) {
  require_compatible(a, b);
  return Multispace(subspace_intersect(a.underlying(), b.underlying()),
                    std::min(a.height(), b.height()));
}

Multispace join(const Multispace& a, const Multispace& b) {
  require_compatible(a, b);
  return Multispace(subspace_sum(a.underlying(), b.underlying()),
                    std::max(a.height(), b.height()));
}

std::size_t distance(const Multispace& a, const Multispace& b) {
  return join(a, b).rank() - meet(a, b).rank();
}

DistanceParts distance_parts(const Multispace& a, const Multispace& b) {
  require_compatible(a, b);
  DistanceParts parts;
  parts.total = distance(a, b);
  parts.underlying = subspace_distance(a.underlying(), b.underlying());
  parts.height = a.height() > b.height() ? a.height() - b.height() : b.height() - a.height();
  return parts;
}

bool multiset_leq(const Multispace& a, const Multispace& b) {
  require_compatible(a, b);
  return a.height() <= b.height() && subspace_leq(a.underlying(), b.underlying());
}

BigCount gaussian_binomial(long long n, long long k, std::uint64_t q) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k == 0 || k == n) return 1;
  // q-Pascal: [i, j] = [i-1, j-1] + q^j [i-1, j], rolling over rows.
  std::vector<BigCount> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (long long i = 1; i <= n; ++i) {
    const long long top = std::min(i, k);
    for (long long j = top; j >= 1; --j)
      row[j] = row[j - 1] + q_power(q, static_cast<std::size_t>(j)) * row[j];
  }
  return row[static_cast<std::size_t>(k)];
}

BigCount count_multispaces(std::size_t n, std::size_t m, std::uint64_t q) {
  BigCount total = 0;
  for (std::size_t k = 0; k <= std::min(n, m); ++k)
    total += gaussian_binomial(static_cast<long long>(n), static_cast<long long>(k), q);
  return total;
}

BigCount count_covered(const Multispace& w) {
  if (w.rank() == 0)
    throw Error(ErrorCode::kRankZero, "the bottom element covers nothing");
  BigCount c = geometric_sum(w.field().order(), w.dim());
  if (w.height() > 0) c += 1;
  return c;
}

BigCount count_covering(const Multispace& w, std::size_t n) {
  if (n < w.dim())
    throw Error(ErrorCode::kDimensionMismatch, "n smaller than dim(W)");
  return 1 + geometric_sum(w.field().order(), n - w.dim());
}

std::vector<Multispace> enumerate_multispaces(const Field& field, std::size_t n,
                                              std::size_t m, std::uint64_t limit) {
  std::vector<Multispace> out;
  for (std::size_t k = 0; k <= std::min(n, m); ++k) {
    SubspaceEnumerator en(field, n, k, limit);
    while (auto s = en.next()) out.emplace_back(std::move(*s), m - k);
  }
  return out;
}

Lattice::Lattice(Field field, std::size_t n, std::size_t m_max, std::uint64_t limit)
    : field_(std::move(field)), n_(n), m_max_(m_max) {
  check_enumeration_limit(field_, n_, limit);
  for (std::size_t r = 0; r <= m_max_; ++r) {
    auto layer = enumerate_multispaces(field_, n_, r, limit);
    for (auto& w : layer) {
      index_.emplace(w, elements_.size());
      elements_.push_back(std::move(w));
    }
  }
  up_.resize(elements_.size());
  down_.resize(elements_.size());

  std::uint64_t vectors = 1;
  for (std::size_t i = 0; i < n_; ++i) vectors *= field_.order();

  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Multispace& w = elements_[i];
    if (w.rank() >= m_max_) continue;
    std::set<std::size_t> upper;
    upper.insert(index_.at(Multispace(w.underlying(), w.height() + 1)));
    for (std::uint64_t v = 1; v < vectors; ++v) {
      FqVector vec = FqVector::from_index(field_, n_, v);
      if (w.underlying().contains(vec)) continue;
      Subspace bigger = subspace_sum(
          w.underlying(), Subspace::row_space(FqMatrix::from_vectors(field_, n_, {&vec, 1})));
      upper.insert(index_.at(Multispace(std::move(bigger), w.height())));
    }
    for (std::size_t j : upper) {
      edges_.emplace_back(i, j);
      up_[i].push_back(j);
      down_[j].push_back(i);
    }
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& d : down_) std::sort(d.begin(), d.end());
}

std::optional<std::size_t> Lattice::index_of(const Multispace& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Lattice::hasse_bfs(std::size_t source) const {
  std::vector<std::size_t> dist(elements_.size(), std::numeric_limits<std::size_t>::max());
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto* nbrs : {&up_[u], &down_[u]})
      for (std::size_t v : *nbrs)
        if (dist[v] == std::numeric_limits<std::size_t>::max()) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
  }
  return dist;
}

std::vector<std::pair<Multispace, Multispace>> hasse_edges(const Field& field,
                                                           std::size_t n,
                                                           std::size_t m_max,
                                                           std::uint64_t limit) {
  Lattice lattice(field, n, m_max, limit);
  std::vector<std::pair<Multispace, Multispace>> out;
  out.reserve(lattice.hasse_edges().size());
  for (auto [lo, hi] : lattice.hasse_edges()) out.emplace_back(lattice[lo], lattice[hi]);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& a : adjacency) deg += a.size();
  return deg / 2;
}

std::vector<std::size_t> Graph::bfs(std::size_t source) const {
  std::vector<std::size_t> dist(vertices.size(), std::numeric_limits<std::size_t>::max());
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adjacency[u])
      if (dist[v] == std::numeric_limits<std::size_t>::max()) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

Graph gamma_graph(const Field& field, std::size_t n, std::size_t m, std::uint64_t limit) {
  Graph g;
  g.vertices = enumerate_multispaces(field, n, m, limit);
  g.adjacency.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (distance(g.vertices[i], g.vertices[j]) == 2) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  return g;
}

RegularityVerdict is_distance_regular(const Graph& g) {
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  const std::size_t v_count = g.vertices.size();
  std::vector<std::vector<std::size_t>> dist(v_count);
  for (std::size_t u = 0; u < v_count; ++u) dist[u] = g.bfs(u);

  RegularityVerdict verdict{true, std::nullopt, 0, {}, {}};
  // Per distance i: (a_i, b_i, c_i) as first observed.
  std::vector<std::optional<std::array<std::size_t, 3>>> seen;
  for (std::size_t u = 0; u < v_count; ++u) {
    for (std::size_t v = 0; v < v_count; ++v) {
      const std::size_t i = dist[u][v];
      if (i == kUnreached) {
        verdict.distance_regular = false;
        verdict.witness = RegularityWitness{u, v, i, "disconnected", 0, 0};
        return verdict;
      }
      std::array<std::size_t, 3> abc{0, 0, 0};
      for (std::size_t w : g.adjacency[v]) {
        const std::size_t dw = dist[u][w];
        if (dw == i) ++abc[0];
        else if (dw == i + 1) ++abc[1];
        else if (i > 0 && dw == i - 1) ++abc[2];
      }
      if (seen.size() <= i) seen.resize(i + 1);
      verdict.diameter = std::max(verdict.diameter, i);
      if (!seen[i]) {
        seen[i] = abc;
        continue;
      }
      static constexpr const char* kNames[3] = {"a", "b", "c"};
      for (int k = 0; k < 3; ++k)
        if ((*seen[i])[k] != abc[k]) {
          verdict.distance_regular = false;
          verdict.witness = RegularityWitness{u, v, i, kNames[k], (*seen[i])[k], abc[k]};
          return verdict;
        }
    }
  }
  for (std::size_t i = 0; i < verdict.diameter; ++i) verdict.intersection_b.push_back((*seen[i])[1]);
  for (std::size_t i = 1; i <= verdict.diameter; ++i) verdict.intersection_c.push_back((*seen[i])[2]);
  return verdict;
}

}  // namespace msp
