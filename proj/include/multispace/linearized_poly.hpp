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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multispace/multispace.hpp"

namespace msp {

// Ordinary polynomial over a field, coefficients from the constant term up,
// trailing zeros trimmed (the zero polynomial has no coefficients).
class DensePoly {
 public:
  DensePoly(Field field, std::vector<Elem> coeffs);

  static DensePoly constant(const Field& field, Elem c);
  // x - root
  static DensePoly linear(const Field& field, Elem root);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Elem eval(Elem x) const;
  DensePoly operator*(const DensePoly& o) const;
  // Divides by (x - root); returns the remainder.
  Elem divide_linear(Elem root);

  bool operator==(const DensePoly& o) const {
    return coeffs_ == o.coeffs_ && field_ == o.field_;
  }

 private:
  Field field_;
  std::vector<Elem> coeffs_;
};

// L(x) = sum_i alpha_i x^(q^i) with alpha_i in the big field and q the order
// of the base field.
class LinearizedPoly {
 public:
  LinearizedPoly(Field big, std::uint32_t base_order,
                 std::map<std::uint64_t, Elem> coeffs);

  // Throws kShapeViolation if some nonzero coefficient sits at a degree that
  // is not a power of base_order.
  static LinearizedPoly from_dense(const DensePoly& p, std::uint32_t base_order);

  const Field& field() const { return big_; }
  std::uint32_t base_order() const { return base_order_; }
  // Only nonzero coefficients are stored.
  const std::map<std::uint64_t, Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Largest i with alpha_i != 0; the ordinary degree is q^q_degree.
  std::uint64_t q_degree() const;
  std::uint64_t degree() const;

  Elem eval(Elem x) const;
  DensePoly to_dense() const;

  // Smallest l dividing n such that every coefficient lies in F_{q^l}.
  std::uint32_t coefficient_subfield_degree(std::uint32_t n) const;

  // "a*x^q^i + ..." in descending i; "0" for the zero polynomial.
  std::string to_text() const;
  static LinearizedPoly parse_text(const std::string& text, const Field& big,
                                   std::uint32_t base_order);

  bool operator==(const LinearizedPoly& o) const {
    return base_order_ == o.base_order_ && coeffs_ == o.coeffs_ && big_ == o.big_;
  }

 private:
  Field big_;
  std::uint32_t base_order_;
  std::map<std::uint64_t, Elem> coeffs_;
};

// Largest q^rank for which the dense product form is built.
inline constexpr std::uint64_t kMaxLinearizedDegree = 1ull << 16;

// Expands prod_{v in W} (x - phi(v)) over the extension F_{q^n} and checks
// the result is a q-polynomial. ext.degree() must equal the ambient
// dimension of w.
LinearizedPoly poly_from_multispace(const Multispace& w, const Extension& ext);

// Root multiset of L as a multispace over F_q^n, found by evaluating L on the
// whole extension and extracting multiplicities by synthetic division.
// Throws kRootsNotInField or kNotAMultispace.
Multispace roots_multiset(const LinearizedPoly& poly, const Extension& ext);

}  // namespace msp
