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

#include <doctest.h>

#include "multispace/rng.hpp"
#include "oracles.hpp"

using namespace msp;

namespace {

const Field& f2() {
  static const Field f = Field::create(2, 1);
  return f;
}

FqVector v2(std::vector<Elem> c) { return FqVector(f2(), std::move(c)); }

Multispace ms(const Field& f, std::size_t n, std::vector<std::vector<Elem>> rows, std::size_t h) {
  VectorMultiset b(f, n);
  for (auto& r : rows) b.push_back(FqVector(f, r));
  return Multispace(span(b), h);
}

// Product formula for the Gaussian binomial, evaluated in exact integers.
BigCount gaussian_product(std::size_t n, std::size_t k, std::uint64_t q) {
  auto power = [q](std::size_t e) {
    BigCount r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= q;
    return r;
  };
  BigCount num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= power(n - i) - 1;
    den *= power(i + 1) - 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("mspan examples") {
  const auto zeros = mspan(VectorMultiset(f2(), 3, {v2({0, 0, 0}), v2({0, 0, 0})}));
  CHECK(zeros.dim() == 0);
  CHECK(zeros.height() == 2);
  CHECK(zeros.rank() == 2);
  const auto mu0 = multiplicity_oracle(VectorMultiset(f2(), 3, {v2({0, 0, 0}), v2({0, 0, 0})}));
  CHECK(mu0.size() == 1);
  CHECK(mu0.at(0) == 4);

  const VectorMultiset b(f2(), 3, {v2({1, 0, 0}), v2({0, 1, 0}), v2({1, 1, 0})});
  const auto w = mspan(b);
  CHECK(w.dim() == 2);
  CHECK(w.height() == 1);
  CHECK(w.rank() == 3);
  const auto mu = multiplicity_oracle(b);
  CHECK(mu.size() == 4);
  for (const auto& [v, c] : mu) CHECK(c == 2);

  const auto empty = mspan(VectorMultiset(f2(), 3));
  CHECK(empty == Multispace::bottom(f2(), 3));
}

TEST_CASE("multiplicity oracle examples") {
  const auto single = multiplicity_oracle(VectorMultiset(f2(), 2, {FqVector(f2(), {1, 0})}));
  CHECK(single.size() == 2);
  CHECK(single.at(0) == 1);
  CHECK(single.at(1) == 1);
  const auto twice =
      multiplicity_oracle(VectorMultiset(f2(), 2, {FqVector(f2(), {1, 0}), FqVector(f2(), {1, 0})}));
  CHECK(twice.at(0) == 2);
  CHECK(twice.at(1) == 2);

  VectorMultiset big(f2(), 2);
  for (int i = 0; i < 21; ++i) big.push_back(FqVector(f2(), {1, 1}));
  CHECK_THROWS_AS(multiplicity_oracle(big), Error);
}

TEST_CASE("uniform multiplicity on random generating multisets") {
  SplitMix64 rng(99);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
  for (int trial = 0; trial < 150; ++trial) {
    auto [p, e] = fields[rng.below(fields.size())];
    const Field f = Field::create(p, e);
    const std::size_t n = 1 + rng.below(4);
    std::size_t m = rng.below(7);
    while (oracle::ipow(f.order(), m) > (1u << 14)) --m;
    VectorMultiset b(f, n);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Elem> c(n);
      for (auto& x : c) x = rng.below(3) == 0 ? 0 : static_cast<Elem>(rng.below(f.order()));
      b.push_back(FqVector(f, c));
    }
    const auto w = mspan(b);
    const auto mu = multiplicity_oracle(b);
    std::set<std::uint64_t> support;
    BigCount total = 0;
    for (const auto& [v, c] : mu) {
      support.insert(v);
      total += c;
      CHECK(c == BigCount(oracle::ipow(f.order(), w.height())));
    }
    CHECK(total == BigCount(oracle::ipow(f.order(), m)));
    CHECK(support == oracle::vector_set(w.underlying()));
    CHECK(w.rank() == m);
  }
}

TEST_CASE("meet, join and distance examples") {
  const std::size_t n = 3;
  const Multispace bottom = Multispace::bottom(f2(), n);
  const Multispace a = ms(f2(), n, {{1, 0, 0}}, 0);
  const Multispace zero1 = Multispace(Subspace::zero(f2(), n), 1);
  const Multispace b = ms(f2(), n, {{0, 1, 0}}, 1);

  CHECK(meet(a, a) == a);
  CHECK(meet(a, zero1) == bottom);
  CHECK(meet(a, bottom) == bottom);
  CHECK(join(a, bottom) == a);

  const Multispace ab = join(a, b);
  CHECK(ab == ms(f2(), n, {{1, 0, 0}, {0, 1, 0}}, 1));
  CHECK(ab.rank() == 3);
  // Least upper bound by brute force over M_2(3, <= 3).
  std::vector<Multispace> all;
  for (std::size_t r = 0; r <= 3; ++r)
    for (auto& w : enumerate_multispaces(f2(), 3, r)) all.push_back(w);
  oracle::Poset poset(all);
  auto idx = [&](const Multispace& w) {
    return static_cast<std::size_t>(
        std::find(poset.elems.begin(), poset.elems.end(), w) - poset.elems.begin());
  };
  CHECK(poset.elems[*poset.lub(idx(a), idx(b))] == ab);
  CHECK(meet(a, b).rank() + join(a, b).rank() == a.rank() + b.rank());

  CHECK(distance(a, a) == 0);
  CHECK(distance(a, zero1) == 2);
  const auto hasse = poset.cover_graph();
  CHECK(oracle::bfs(hasse, idx(a))[idx(zero1)] == 2);

  const Multispace s1 = ms(f2(), n, {{1, 0, 0}, {0, 1, 0}}, 0);
  const Multispace s2 = ms(f2(), n, {{0, 1, 0}, {0, 0, 1}}, 0);
  CHECK(distance(s1, s2) == subspace_distance(s1.underlying(), s2.underlying()));
  CHECK(distance(s1, s2) == 2);

  const auto parts = distance_parts(a, b);
  CHECK(parts.total == parts.underlying + parts.height);
  CHECK_THROWS_AS(meet(a, Multispace::bottom(f2(), 2)), Error);
}

TEST_CASE("multiset order") {
  const Multispace bottom = Multispace::bottom(f2(), 3);
  const Multispace a0 = ms(f2(), 3, {{1, 0, 0}}, 0), a1 = ms(f2(), 3, {{1, 0, 0}}, 1);
  CHECK(multiset_leq(bottom, a1));
  CHECK_FALSE(multiset_leq(a1, a0));
  CHECK(multiset_leq(a0, a1));

  SplitMix64 rng(5);
  const auto all = enumerate_multispaces(Field::create(3, 1), 2, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& x = all[rng.below(all.size())];
    const auto& y = all[rng.below(all.size())];
    CHECK(multiset_leq(x, y) == oracle::multiset_leq(oracle::multiset(x), oracle::multiset(y)));
  }
}

TEST_CASE("Gaussian binomials") {
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(3, 2, 2) == 7);
  CHECK(gaussian_binomial(5, 0, 3) == 1);
  CHECK(gaussian_binomial(3, 4, 2) == 0);
  CHECK(gaussian_binomial(3, -1, 2) == 0);
  CHECK(gaussian_binomial(2, 1, 4) == 5);
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (std::uint64_t q : {2, 3, 4, 5, 7, 9, 16, 65536})
        CHECK(gaussian_binomial(n, k, q) == gaussian_product(n, k, q));
  // Exceeds 64 bits.
  CHECK(gaussian_binomial(40, 20, 2) > BigCount(UINT64_MAX));
  for (std::size_t k = 0; k <= 4; ++k)
    CHECK(gaussian_binomial(4, k, 2) == enumerate_subspaces(f2(), 4, k).size());
}

TEST_CASE("multispace counts") {
  CHECK(count_multispaces(3, 2, 2) == 15);
  CHECK(count_multispaces(3, 0, 2) == 1);
  CHECK(count_multispaces(3, 5, 2) == 16);
  CHECK(count_multispaces(3, 3, 2) == 16);
  CHECK(enumerate_multispaces(f2(), 3, 2).size() == 15);
  CHECK(enumerate_multispaces(f2(), 3, 3).size() == 16);
  const auto bottoms = enumerate_multispaces(Field::create(5, 1), 3, 0);
  REQUIRE(bottoms.size() == 1);
  CHECK(bottoms[0] == Multispace::bottom(Field::create(5, 1), 3));
  for (const auto& w : enumerate_multispaces(f2(), 3, 5)) CHECK(w.rank() == 5);
}

TEST_CASE("cover numbers") {
  const Multispace full(Subspace::full(f2(), 3), 0);
  CHECK(count_covered(full) == 7);
  const Multispace zero1(Subspace::zero(f2(), 3), 1);
  CHECK(count_covered(zero1) == 1);
  CHECK(count_covering(zero1, 3) == 8);
  const Field f3 = Field::create(3, 1);
  CHECK(count_covering(Multispace::bottom(f3, 4), 4) == 1 + 1 + 3 + 9 + 27);
  CHECK_THROWS_AS(count_covered(Multispace::bottom(f2(), 3)), Error);

  // Brute-force cover relation on M_3(2, <= 3); the top rank is excluded from
  // the covering check because its covers lie outside the list.
  std::vector<Multispace> all;
  for (std::size_t r = 0; r <= 3; ++r)
    for (auto& w : enumerate_multispaces(f3, 2, r)) all.push_back(w);
  oracle::Poset poset(all);
  for (std::size_t i = 0; i < poset.size(); ++i) {
    std::size_t down = 0, up = 0;
    for (std::size_t j = 0; j < poset.size(); ++j) {
      down += poset.covers(i, j);
      up += poset.covers(j, i);
    }
    if (all[i].rank() >= 1) CHECK(count_covered(all[i]) == down);
    if (all[i].rank() < 3) CHECK(count_covering(all[i], 2) == up);
  }
}

TEST_CASE("Hasse diagram") {
  Lattice small(f2(), 3, 1);
  CHECK(small.size() == 9);
  CHECK(small.hasse_edges().size() == 8);

  Lattice full(f2(), 3, 3);
  std::map<std::size_t, std::size_t> per_rank;
  for (const auto& w : full.elements()) ++per_rank[w.rank()];
  CHECK(per_rank == std::map<std::size_t, std::size_t>{{0, 1}, {1, 8}, {2, 15}, {3, 16}});
  for (auto [lo, hi] : full.hasse_edges()) {
    CHECK(distance(full[lo], full[hi]) == 1);
    CHECK(full[hi].rank() == full[lo].rank() + 1);
    CHECK(multiset_leq(full[lo], full[hi]));
  }
  oracle::Poset poset(full.elements());
  std::size_t oracle_edges = 0;
  for (std::size_t x = 0; x < poset.size(); ++x)
    for (std::size_t y = 0; y < poset.size(); ++y)
      if (poset.covers(y, x)) {
        ++oracle_edges;
        CHECK(std::binary_search(full.hasse_edges().begin(), full.hasse_edges().end(),
                                 std::make_pair(x, y)));
      }
  CHECK(oracle_edges == full.hasse_edges().size());
  CHECK(hasse_edges(f2(), 3, 3).size() == full.hasse_edges().size());
  CHECK_THROWS_AS(Lattice(f2(), 21, 1), Error);
}

TEST_CASE("lattice laws on M_3(2, <= 3) and random triples over F_4^3") {
  const Field f3 = Field::create(3, 1);
  Lattice lat(f3, 2, 3);
  const auto& e = lat.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto dist = lat.hasse_bfs(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      CHECK(meet(e[i], e[j]) == meet(e[j], e[i]));
      CHECK(join(e[i], e[j]) == join(e[j], e[i]));
      CHECK(meet(e[i], join(e[i], e[j])) == e[i]);
      CHECK(join(e[i], meet(e[i], e[j])) == e[i]);
      CHECK(meet(e[i], e[j]).rank() + join(e[i], e[j]).rank() == e[i].rank() + e[j].rank());
      CHECK(distance(e[i], e[j]) == dist[j]);
    }
  }

  const Field f4 = Field::create(2, 2);
  SplitMix64 rng(11);
  auto random_ms = [&] {
    VectorMultiset b(f4, 3);
    const std::size_t m = rng.below(6);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Elem> c(3);
      for (auto& x : c) x = rng.below(2) ? static_cast<Elem>(rng.below(4)) : 0;
      b.push_back(FqVector(f4, c));
    }
    return mspan(b);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_ms(), y = random_ms(), z = random_ms();
    CHECK(meet(meet(x, y), z) == meet(x, meet(y, z)));
    CHECK(join(join(x, y), z) == join(x, join(y, z)));
    const auto y_big = join(x, y);  // x <= y_big
    CHECK(join(x, meet(z, y_big)) == meet(join(x, z), y_big));
    CHECK(distance(x, z) <= distance(x, y) + distance(y, z));
  }
}

TEST_CASE("subspaces form a sublattice") {
  const auto subspaces = [] {
    std::vector<Multispace> out;
    for (std::size_t k = 0; k <= 3; ++k)
      for (auto& s : enumerate_subspaces(f2(), 3, k)) out.emplace_back(s, 0);
    return out;
  }();
  for (const auto& a : subspaces)
    for (const auto& b : subspaces) {
      CHECK(meet(a, b) == Multispace(subspace_intersect(a.underlying(), b.underlying()), 0));
      CHECK(join(a, b) == Multispace(subspace_sum(a.underlying(), b.underlying()), 0));
    }
}

TEST_CASE("Gamma graph") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const Graph g = gamma_graph(f2(), n, 1);
    std::vector<std::size_t> lines;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      if (g.vertices[i].height() == 0) lines.push_back(i);
    CHECK(lines.size() == oracle::ipow(2, n) - 1);
    for (std::size_t a : lines)
      for (std::size_t b : lines)
        if (a != b) CHECK(std::binary_search(g.adjacency[a].begin(), g.adjacency[a].end(), b));
  }

  const Graph g = gamma_graph(f2(), 3, 2);
  CHECK(g.vertices.size() == 15);
  const RegularityVerdict verdict = is_distance_regular(g);
  CHECK_FALSE(verdict.distance_regular);
  REQUIRE(verdict.witness.has_value());
  // Seen from a line, ({0}, ht 2) has no neighbour at distance 2; seen from
  // ({0}, ht 2), a line has the 3 planes through it.
  const auto& w = *verdict.witness;
  CHECK(w.graph_distance == 1);
  CHECK(w.which == "b");
  CHECK(w.expected == 3);
  CHECK(w.found == 0);
  CHECK(g.vertices[w.u].dim() == 1);
  CHECK(g.vertices[w.v].dim() == 0);
  const auto du = g.bfs(w.u);
  std::size_t further = 0;
  for (std::size_t x : g.adjacency[w.v]) further += du[x] == 2;
  CHECK(further == w.found);

  for (auto [field, n, m] : std::vector<std::tuple<Field, std::size_t, std::size_t>>{
           {f2(), 3, 2}, {f2(), 3, 3}, {f2(), 4, 2}, {Field::create(3, 1), 2, 2}}) {
    const Graph gg = gamma_graph(field, n, m);
    for (std::size_t i = 0; i < gg.vertices.size(); ++i) {
      const auto d = gg.bfs(i);
      for (std::size_t j = 0; j < gg.vertices.size(); ++j) {
        const std::size_t metric = distance(gg.vertices[i], gg.vertices[j]);
        CHECK(metric % 2 == 0);
        CHECK(d[j] * 2 == metric);
      }
    }
  }

  // Degenerate instances can be distance-regular.
  CHECK(is_distance_regular(gamma_graph(f2(), 3, 0)).distance_regular);
  const auto lines_only = is_distance_regular(gamma_graph(f2(), 1, 1));
  CHECK(lines_only.distance_regular);
}
