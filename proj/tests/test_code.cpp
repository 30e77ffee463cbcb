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

#include "multispace/code.hpp"
#include "multispace/rng.hpp"
#include "oracles.hpp"

using namespace msp;

namespace {

const Field& f2() {
  static const Field f = Field::create(2, 1);
  return f;
}

// Largest clique by trying every subset; only for tiny spaces.
std::size_t brute_max_code(const std::vector<Multispace>& space, std::size_t d_min) {
  const std::size_t n = space.size();
  REQUIRE(n <= 16);
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto bits = static_cast<std::size_t>(std::popcount(mask));
    if (bits <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && distance(space[i], space[j]) < d_min) ok = false;
    if (ok) best = bits;
  }
  return best;
}

std::size_t pairwise_min(const std::vector<Multispace>& words) {
  std::size_t best = kInfiniteDistance;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, distance(words[i], words[j]));
  return best;
}

}  // namespace

TEST_CASE("code space order and distance table") {
  const auto space = code_space(f2(), 3, 3);
  CHECK(space.size() == 40);
  for (std::size_t i = 1; i < space.size(); ++i) CHECK(space[i - 1].rank() <= space[i].rank());
  DistanceTable table(space);
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j) CHECK(table(i, j) == distance(space[i], space[j]));
}

TEST_CASE("minimum distance") {
  const auto rank1 = enumerate_multispaces(f2(), 3, 1);
  REQUIRE(rank1.size() == 8);
  const MultispaceCode all(f2(), 3, 1, rank1);
  CHECK(min_distance(all) == 2);
  CHECK(all.min_dist() == 2);

  MultispaceCode single(f2(), 3, 3, {rank1[0]});
  CHECK(single.min_dist() == kInfiniteDistance);
  CHECK_THROWS_AS(min_distance(single), Error);
  single.add(Multispace(Subspace::full(f2(), 3), 0));
  CHECK(single.min_dist() == distance(rank1[0], Multispace(Subspace::full(f2(), 3), 0)));

  CHECK_THROWS_AS(single.add(rank1[0]), Error);
  CHECK_THROWS_AS(single.add(Multispace(Subspace::zero(f2(), 3), 4)), Error);
  CHECK_THROWS_AS(MultispaceCode(f2(), 3, 1, {rank1[0], rank1[0]}), Error);

  // Equal-rank distances are even.
  const auto rank2 = enumerate_multispaces(f2(), 3, 2);
  for (const auto& a : rank2)
    for (const auto& b : rank2) CHECK(distance(a, b) % 2 == 0);
}

TEST_CASE("greedy codes") {
  const auto whole = greedy_code(f2(), 3, 3, 1, 7);
  CHECK(whole.size() == 40);

  // Diameter of rank <= 3 over F_2^3 by exhaustive pair scan.
  const auto space = code_space(f2(), 3, 3);
  std::size_t diameter = 0;
  for (const auto& a : space)
    for (const auto& b : space) diameter = std::max(diameter, distance(a, b));
  CHECK(diameter == 6);
  CHECK(greedy_code(f2(), 3, 3, 7, 7).size() == 1);
  CHECK(exhaustive_optimal_code(f2(), 3, 3, 6).size() >= 2);

  for (std::uint64_t seed = 0; seed < 10; ++seed)
    for (std::size_t d = 1; d <= 6; ++d) {
      const auto code = greedy_code(f2(), 3, 3, d, seed);
      if (code.size() >= 2) CHECK(pairwise_min(code.codewords()) >= d);
      CHECK(code.design_distance() == d);
    }
  CHECK(greedy_code(f2(), 3, 3, 3, 42).codewords() == greedy_code(f2(), 3, 3, 3, 42).codewords());
  CHECK_THROWS_AS(greedy_code(f2(), 3, 3, 0, 1), Error);
  CHECK_THROWS_AS(greedy_code(f2(), 3, 3, 1, 1, 4), Error);
}

TEST_CASE("exhaustive optimum") {
  const auto space = code_space(f2(), 2, 2);
  CHECK(space.size() == 10);
  for (std::size_t d = 1; d <= 5; ++d) {
    const auto opt = exhaustive_optimal_code(f2(), 2, 2, d);
    CHECK(opt.size() == brute_max_code(space, d));
    if (opt.size() >= 2) CHECK(pairwise_min(opt.codewords()) >= d);
  }
  CHECK(exhaustive_optimal_code(f2(), 2, 2, 1).size() == 10);

  const auto small = code_space(f2(), 2, 3);
  REQUIRE(small.size() == 15);
  for (std::size_t d = 2; d <= 4; ++d)
    CHECK(exhaustive_optimal_code(f2(), 2, 3, d).size() == brute_max_code(small, d));

  for (std::size_t d = 1; d <= 6; ++d) {
    const auto opt = exhaustive_optimal_code(f2(), 3, 3, d);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
      CHECK(opt.size() >= greedy_code(f2(), 3, 3, d, seed).size());
    CHECK(BigCount(opt.size()) <= sphere_packing_bound(f2(), 3, 3, d));
  }
  CHECK_THROWS_AS(exhaustive_optimal_code(f2(), 3, 5, 2), Error);
}

TEST_CASE("balls and the packing bound") {
  const Multispace bottom = Multispace::bottom(f2(), 3);
  CHECK(ball_size(bottom, 0, 3).size == 1);
  CHECK(ball_size(bottom, 1, 3).size == 2 + 1 + 2 + 4);
  CHECK(ball_size(bottom, 6, 3).size == 40);
  const Field f3 = Field::create(3, 1);
  CHECK(ball_size(Multispace::bottom(f3, 2), 1, 2).size == 2 + 1 + 3);

  // Graph-distance balls in the brute-force cover graph.
  std::vector<Multispace> all;
  for (std::size_t r = 0; r <= 3; ++r)
    for (auto& w : enumerate_multispaces(f2(), 3, r)) all.push_back(w);
  oracle::Poset poset(all);
  const auto graph = poset.cover_graph();
  for (std::size_t c = 0; c < all.size(); ++c) {
    const auto dist = oracle::bfs(graph, c);
    BigCount previous = 0;
    for (std::size_t r = 0; r <= 6; ++r) {
      const std::size_t expected =
          static_cast<std::size_t>(std::count_if(dist.begin(), dist.end(), [&](std::size_t d) { return d <= r; }));
      const BigCount got = ball_size(all[c], r, 3).size;
      CHECK(got == expected);
      CHECK(got >= previous);
      previous = got;
    }
  }

  CHECK(sphere_packing_bound(f2(), 3, 3, 1) == 40);
  BigCount last = 41;
  for (std::size_t d = 1; d <= 7; ++d) {
    const BigCount b = sphere_packing_bound(f2(), 3, 3, d);
    CHECK(b <= last);
    last = b;
  }
}

TEST_CASE("decoding") {
  const auto code = greedy_code(f2(), 3, 3, 3, 5);
  REQUIRE(code.size() >= 2);
  const std::size_t radius = (code.min_dist() - 1) / 2;
  const auto space = code_space(f2(), 3, 3);
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto& c = code.codewords()[i];
    const auto self = decode(code, c);
    CHECK(self.index == i);
    CHECK(self.distance == 0);
    for (const auto& w : space)
      if (distance(w, c) <= radius) CHECK(decode(code, w).codeword == c);
  }
  // Every word decodes to some nearest codeword, earliest on ties.
  for (const auto& w : space) {
    const auto got = decode(code, w);
    for (std::size_t i = 0; i < code.size(); ++i) {
      const std::size_t d = distance(w, code.codewords()[i]);
      CHECK(d >= got.distance);
      if (i < got.index) CHECK(d > got.distance);
    }
  }

  // Midpoint of (span{e1}, 0) and (span{e2}, 0) is bottom or their join.
  const Multispace a(span(VectorMultiset(f2(), 3, {FqVector::unit(f2(), 3, 0)})), 0);
  const Multispace b(span(VectorMultiset(f2(), 3, {FqVector::unit(f2(), 3, 1)})), 0);
  const MultispaceCode ab(f2(), 3, 3, {a, b});
  const MultispaceCode ba(f2(), 3, 3, {b, a});
  for (const auto& mid : {meet(a, b), join(a, b)}) {
    CHECK(decode(ab, mid).codeword == a);
    CHECK(decode(ba, mid).codeword == b);
    CHECK(decode(ab, mid).distance == 1);
  }
  // Received words may exceed m_max.
  CHECK(decode(ab, Multispace(Subspace::full(f2(), 3), 3)).distance == 5);
  CHECK_THROWS_AS(decode(MultispaceCode(f2(), 3, 3), a), Error);
}

TEST_CASE("code space growth") {
  CHECK(codespace_growth(2, 3, 3) == 40);
  CHECK(codespace_growth(2, 3, 0) == 1);
  CHECK(codespace_growth(3, 2, 2) == BigCount(code_space(Field::create(3, 1), 2, 2).size()));
  BigCount projective = 0;
  for (std::size_t k = 0; k <= 3; ++k) projective += gaussian_binomial(3, k, 2);
  for (std::size_t m = 30; m <= 60; ++m) {
    const double ratio = static_cast<double>(codespace_growth(2, 3, m)) /
                         static_cast<double>(BigCount(m) * projective);
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.1));
  }
}

TEST_CASE("seed sweeps") {
  const auto sweep = greedy_sweep(f2(), 3, 3, 3, 10, 8);
  CHECK(sweep.seed >= 10);
  CHECK(sweep.seed < 18);
  CHECK(sweep.code.codewords() == greedy_code(f2(), 3, 3, 3, sweep.seed).codewords());
  for (std::uint64_t s = 10; s < 18; ++s) {
    const auto size = greedy_code(f2(), 3, 3, 3, s).size();
    CHECK(size <= sweep.code.size());
    if (s < sweep.seed) CHECK(size < sweep.code.size());
  }
  CHECK_THROWS_AS(greedy_sweep(f2(), 3, 3, 3, 0, 0), Error);

  // Larger rank budgets give strictly larger codes at d_min = 2.
  std::size_t previous = 0;
  for (std::size_t m = 2; m <= 8; ++m) {
    const std::size_t size = greedy_sweep(f2(), 2, m, 2, 0, 32).code.size();
    CHECK(size > previous);
    previous = size;
  }
}
