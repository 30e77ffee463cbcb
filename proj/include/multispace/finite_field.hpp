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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multispace/error.hpp"

namespace msp {

// Raw element encoding: the coefficient vector of the residue polynomial,
// read as a base-p integer with the constant term as least significant digit.
using Elem = std::uint32_t;

// Polynomial over F_p, coefficients from constant term upward.
using PrimePoly = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

bool is_prime(std::uint64_t n);

// Base-p integer encoding of a polynomial (leading coefficient included).
std::uint64_t encode_prime_poly(const PrimePoly& poly, std::uint32_t p);
PrimePoly decode_prime_poly(std::uint64_t code, std::uint32_t p);

// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(const PrimePoly& poly, std::uint32_t p);

// Smallest (by base-p encoding) monic irreducible polynomial of degree e.
PrimePoly smallest_irreducible(std::uint32_t p, std::uint32_t e);

class FieldElement;

// Handle to an immutable finite field context F_q, q = p^e <= 2^16.
// Copies share the same tables. Two handles denote the same field iff they
// agree on (p, e, modulus).
class Field {
 public:
  // Throws kNotPrime, kNotIrreducible, kFieldTooLarge, kParseError.
  static Field create(std::uint32_t p, std::uint32_t e,
                      std::optional<PrimePoly> modulus = std::nullopt);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  const PrimePoly& modulus() const;
  // Encoded modulus, as used in the "p^e/modulus" field spec.
  std::uint64_t modulus_code() const;
  // A generator of the multiplicative group used for the log tables.
  Elem primitive() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool contains(Elem a) const { return a < order(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // kDivisionByZero for a == 0
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t k) const;
  // Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const;

  // a^(base_order^i). Requires order() to be a power of base_order
  // (kContextMismatch otherwise).
  Elem frobenius(Elem a, std::uint32_t base_order, std::uint64_t i) const;

  FieldElement element(Elem value) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  // "p^e/modulus".
  std::string spec() const;

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Throws kContextMismatch when the fields differ.
void require_same_field(const Field& a, const Field& b);

// An element together with the field it lives in.
class FieldElement {
 public:
  FieldElement(Field field, Elem value);

  const Field& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement frobenius(std::uint32_t base_order, std::uint64_t i) const;

  bool operator==(const FieldElement& o) const {
    return value_ == o.value_ && field_ == o.field_;
  }

 private:
  Field field_;
  Elem value_;
};

// F_{q^l} built directly over F_p, together with the embedding of the base
// field F_q obtained from a root of the base modulus.
class Extension {
 public:
  static Extension build(const Field& base, std::uint32_t degree);

  const Field& base() const { return base_; }
  const Field& big() const { return big_; }
  std::uint32_t degree() const { return degree_; }
  // Residue class of x in the big field.
  Elem beta() const { return beta_; }
  Elem embed(Elem a) const { return embed_.at(a); }

  // (c_0, ..., c_{l-1}) in F_q^l -> sum embed(c_i) * beta^i.
  Elem to_big(std::span<const Elem> coords) const;
  // Inverse of to_big; throws kContextMismatch if y is out of range.
  std::vector<Elem> from_big(Elem y) const;

 private:
  Extension(Field base, Field big, std::uint32_t degree)
      : base_(std::move(base)), big_(std::move(big)), degree_(degree) {}

  Field base_;
  Field big_;
  std::uint32_t degree_;
  Elem beta_ = 1;
  std::vector<Elem> embed_;
  std::vector<Elem> beta_powers_;
  std::vector<std::uint32_t> inverse_;  // big element -> packed base-q coords
};

}  // namespace msp
