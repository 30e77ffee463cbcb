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

#include "multispace/finite_field.hpp"

using namespace msp;

namespace {

// Schoolbook product of base-p digit vectors reduced by the modulus, written
// independently of the library's table construction.
Elem reference_mul(const Field& f, Elem a, Elem b) {
  const std::uint32_t p = f.characteristic(), e = f.degree();
  std::vector<std::uint32_t> da(e, 0), db(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  std::vector<std::uint32_t> prod(2 * e, 0);
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto& m = f.modulus();
  for (std::uint32_t k = 2 * e - 1; k >= e; --k) {
    const std::uint32_t c = prod[k];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= e; ++i)
      prod[k - e + i] = (prod[k - e + i] + p * p - c * m[i] % p) % p;
  }
  Elem out = 0;
  for (std::uint32_t i = e; i-- > 0;) out = out * p + prod[i];
  return out;
}

}  // namespace

TEST_CASE("field construction") {
  const Field f2 = Field::create(2, 1);
  CHECK(f2.order() == 2);
  CHECK(f2.modulus() == PrimePoly{0, 1});
  CHECK(f2.spec() == "2^1/2");

  // Of the four monic quadratics over F_2 only x^2 + x + 1 has no root.
  int irreducible = 0;
  for (std::uint32_t low = 0; low < 4; ++low) {
    PrimePoly poly = decode_prime_poly(low, 2);
    poly.resize(3, 0);
    poly[2] = 1;
    const bool root0 = poly[0] == 0;
    const bool root1 = (poly[0] + poly[1] + poly[2]) % 2 == 0;
    if (!root0 && !root1) ++irreducible;
  }
  CHECK(irreducible == 1);
  const Field f4 = Field::create(2, 2);
  CHECK(f4.modulus() == PrimePoly{1, 1, 1});
  CHECK(f4.modulus_code() == 7);
  CHECK(f4.spec() == "2^2/7");

  CHECK(Field::create(2, 4).modulus_code() == 19);  // x^4 + x + 1
  CHECK(Field::create(3, 2).modulus() == PrimePoly{1, 0, 1});  // x^2 + 1
}

TEST_CASE("field construction errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no exception");
    return ErrorCode::kParseError;
  };
  CHECK(code_of([] { Field::create(4, 1); }) == ErrorCode::kNotPrime);
  CHECK(code_of([] { Field::create(2, 17); }) == ErrorCode::kFieldTooLarge);
  CHECK(code_of([] { Field::create(257, 2); }) == ErrorCode::kFieldTooLarge);
  CHECK(code_of([] { Field::create(2, 2, PrimePoly{1, 0, 1}); }) == ErrorCode::kNotIrreducible);
  CHECK(code_of([] { Field::create(2, 2, PrimePoly{1, 1}); }) == ErrorCode::kNotIrreducible);
  CHECK(Field::create(2, 16).order() == 65536);
}

TEST_CASE("element arithmetic examples") {
  const Field f2 = Field::create(2, 1);
  CHECK(f2.add(1, 1) == 0);
  const Field f4 = Field::create(2, 2);
  CHECK(f4.mul(2, 2) == 3);  // x * x = x + 1
  const Field f5 = Field::create(5, 1);
  CHECK(f5.inv(2) == 3);
  CHECK_THROWS_AS(f5.inv(0), Error);

  const Field f3 = Field::create(3, 1);
  CHECK_THROWS_AS(f3.element(1) + f5.element(1), Error);
  CHECK((f5.element(2) * f5.element(3)).value() == 1);
  CHECK((f5.element(2) - f5.element(4)).value() == 3);
  CHECK((-f5.element(2)).value() == 3);
  CHECK((f4.element(2) / f4.element(3)).value() == f4.mul(2, f4.inv(3)));
}

TEST_CASE("field axioms hold exhaustively for small fields") {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {
      {2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {7, 2}, {3, 3}};
  for (auto [p, e] : fields) {
    const Field f = Field::create(p, e);
    CAPTURE(f.spec());
    const Elem q = f.order();
    bool ok = true;
    for (Elem a = 0; a < q && ok; ++a) {
      if (a != 0) ok &= f.mul(a, f.inv(a)) == 1;
      ok &= f.add(a, f.neg(a)) == 0;
      for (Elem b = 0; b < q && ok; ++b) {
        ok &= f.add(a, b) == f.add(b, a);
        ok &= f.mul(a, b) == f.mul(b, a);
        ok &= f.mul(a, b) == reference_mul(f, a, b);
        ok &= f.sub(f.add(a, b), b) == a;
        for (Elem c = 0; c < q && ok; c += (q > 32 ? 7 : 1)) {
          ok &= f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
          ok &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
          ok &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("axioms over F_256") {
  const Field f = Field::create(2, 8);
  bool ok = true;
  for (Elem a = 0; a < 256; ++a) {
    if (a) ok &= f.mul(a, f.inv(a)) == 1;
    for (Elem b = 0; b < 256; ++b) {
      ok &= f.mul(a, b) == reference_mul(f, a, b);
      ok &= f.frobenius(f.add(a, b), 2, 1) == f.add(f.frobenius(a, 2, 1), f.frobenius(b, 2, 1));
    }
  }
  CHECK(ok);
}

TEST_CASE("frobenius") {
  const Field f4 = Field::create(2, 2);
  CHECK(f4.frobenius(2, 2, 1) == 3);  // x^2 = x + 1
  for (Elem a = 0; a < 4; ++a) {
    CHECK(f4.frobenius(a, 4, 1) == a);
    CHECK(f4.frobenius(a, 2, 2) == a);  // period divides the degree over F_2
  }
  CHECK(f4.frobenius(0, 2, 5) == 0);
  CHECK_THROWS_AS(f4.frobenius(1, 3, 1), Error);

  const Field f5 = Field::create(5, 1);
  for (Elem a = 0; a < 5; ++a) CHECK(f5.frobenius(a, 5, 1) == a);

  // Additivity over F_9 and F_27 with base 3, and periodicity in the degree.
  for (auto e : {2u, 3u}) {
    const Field f = Field::create(3, e);
    for (Elem a = 0; a < f.order(); ++a) {
      CHECK(f.frobenius(a, 3, e) == a);
      for (Elem b = 0; b < f.order(); ++b)
        REQUIRE(f.frobenius(f.add(a, b), 3, 1) ==
                f.add(f.frobenius(a, 3, 1), f.frobenius(b, 3, 1)));
    }
  }
}

TEST_CASE("extension embedding") {
  const Field f4 = Field::create(2, 2);
  const Extension ext = Extension::build(f4, 2);
  CHECK(ext.big().order() == 16);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      CHECK(ext.embed(f4.mul(a, b)) == ext.big().mul(ext.embed(a), ext.embed(b)));
      CHECK(ext.embed(f4.add(a, b)) == ext.big().add(ext.embed(a), ext.embed(b)));
    }
  // The image of F_4 is fixed by x -> x^4.
  for (Elem a = 0; a < 4; ++a) CHECK(ext.big().frobenius(ext.embed(a), 4, 1) == ext.embed(a));

  // to_big is a bijection F_4^2 -> F_16 with from_big as inverse.
  for (Elem y = 0; y < 16; ++y) CHECK(ext.to_big(ext.from_big(y)) == y);

  const Extension prime = Extension::build(Field::create(3, 1), 3);
  CHECK(prime.beta() == 3);
  const std::vector<Elem> e1{0, 1, 0};
  CHECK(prime.to_big(e1) == 3);
}
