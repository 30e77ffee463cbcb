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

#include "multispace/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace msp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kFieldTooLarge: return "FieldTooLarge";
    case ErrorCode::kContextMismatch: return "ContextMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kRankZero: return "RankZero";
    case ErrorCode::kShapeViolation: return "ShapeViolation";
    case ErrorCode::kRootsNotInField: return "RootsNotInField";
    case ErrorCode::kNotAMultispace: return "NotAMultispace";
    case ErrorCode::kTooFewCodewords: return "TooFewCodewords";
    case ErrorCode::kEmptyCode: return "EmptyCode";
    case ErrorCode::kConfigInvalid: return "ConfigInvalid";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotCanonical: return "NotCanonical";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t encode_prime_poly(const PrimePoly& poly, std::uint32_t p) {
  std::uint64_t code = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) code = code * p + *it;
  return code;
}

PrimePoly decode_prime_poly(std::uint64_t code, std::uint32_t p) {
  PrimePoly poly;
  while (code > 0) {
    poly.push_back(static_cast<std::uint32_t>(code % p));
    code /= p;
  }
  return poly;
}

namespace {

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime and small: Fermat.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// a mod m over F_p; m must be nonzero.
PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint32_t factor =
        static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = std::uint64_t{factor} * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible(const PrimePoly& poly_in, std::uint32_t p) {
  PrimePoly poly = poly_in;
  trim(poly);
  if (poly.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(poly.size() - 1);
  if (deg == 1) return true;
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      PrimePoly divisor = decode_prime_poly(low, p);
      divisor.resize(d + 1, 0);
      divisor[d] = 1;
      if (poly_mod(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

PrimePoly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    PrimePoly candidate = decode_prime_poly(low, p);
    candidate.resize(e + 1, 0);
    candidate[e] = 1;
    if (is_irreducible(candidate, p)) return candidate;
  }
  throw Error(ErrorCode::kNotIrreducible, "no irreducible polynomial found");
}

struct Field::Impl {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  PrimePoly modulus;
  Elem primitive = 0;
  std::vector<Elem> exp_table;          // size 2(q-1)
  std::vector<std::uint32_t> log_table;  // size q

  Elem add(Elem a, Elem b) const {
    if (p == 2) return a ^ b;
    if (e == 1) return (a + b) % p;
    Elem result = 0, scale = 1;
    while (a > 0 || b > 0) {
      result += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return result;
  }

  Elem neg(Elem a) const {
    if (p == 2) return a;
    if (e == 1) return a == 0 ? 0 : p - a;
    Elem result = 0, scale = 1;
    while (a > 0) {
      result += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return result;
  }

  // Schoolbook product modulo the modulus; only used to build the tables.
  Elem mul_slow(Elem a, Elem b) const {
    PrimePoly pa = decode_prime_poly(a, p), pb = decode_prime_poly(b, p);
    if (pa.empty() || pb.empty()) return 0;
    PrimePoly prod(pa.size() + pb.size() - 1, 0);
    for (std::size_t i = 0; i < pa.size(); ++i)
      for (std::size_t j = 0; j < pb.size(); ++j)
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
    return static_cast<Elem>(encode_prime_poly(poly_mod(prod, modulus, p), p));
  }

  void build_tables() {
    exp_table.assign(2 * (q - 1), 0);
    log_table.assign(q, 0);
    for (Elem g = 1; g < q; ++g) {
      Elem x = 1;
      std::uint32_t order = 0;
      do {
        exp_table[order] = x;
        x = mul_slow(x, g);
        ++order;
      } while (x != 1 && order < q - 1);
      if (x == 1 && order == q - 1) {
        primitive = g;
        break;
      }
    }
    for (std::uint32_t k = 0; k < q - 1; ++k) {
      exp_table[k + q - 1] = exp_table[k];
      log_table[exp_table[k]] = k;
    }
  }
};

Field Field::create(std::uint32_t p, std::uint32_t e,
                    std::optional<PrimePoly> modulus) {
  if (!is_prime(p))
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorCode::kParseError, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(ErrorCode::kFieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^16");
  }
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = static_cast<std::uint32_t>(q);
  if (modulus) {
    PrimePoly m = *modulus;
    trim(m);
    if (m.size() != e + 1 || m.back() != 1 ||
        std::any_of(m.begin(), m.end(), [p](auto c) { return c >= p; }))
      throw Error(ErrorCode::kNotIrreducible,
                  "modulus must be monic of degree " + std::to_string(e));
    if (!is_irreducible(m, p))
      throw Error(ErrorCode::kNotIrreducible, "modulus is reducible");
    impl->modulus = std::move(m);
  } else {
    impl->modulus = smallest_irreducible(p, e);
  }
  impl->build_tables();
  return Field(std::move(impl));
}

std::uint32_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::degree() const { return impl_->e; }
std::uint32_t Field::order() const { return impl_->q; }
const PrimePoly& Field::modulus() const { return impl_->modulus; }
std::uint64_t Field::modulus_code() const {
  return encode_prime_poly(impl_->modulus, impl_->p);
}
Elem Field::primitive() const { return impl_->primitive; }

Elem Field::add(Elem a, Elem b) const { return impl_->add(a, b); }
Elem Field::sub(Elem a, Elem b) const { return impl_->add(a, impl_->neg(b)); }
Elem Field::neg(Elem a) const { return impl_->neg(a); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return impl_->exp_table[impl_->log_table[a] + impl_->log_table[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const std::uint32_t l = impl_->log_table[a];
  return impl_->exp_table[l == 0 ? 0 : impl_->q - 1 - l];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = impl_->log_table[a];
  const std::uint64_t n = impl_->q - 1;
  return impl_->exp_table[(l * (k % n)) % n];
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "log of zero");
  return impl_->log_table[a];
}

Elem Field::exp(std::uint64_t k) const {
  return impl_->exp_table[k % (impl_->q - 1)];
}

Elem Field::frobenius(Elem a, std::uint32_t base_order, std::uint64_t i) const {
  std::uint64_t power = 1;
  while (power < impl_->q && base_order > 1) power *= base_order;
  if (base_order < 2 || power != impl_->q)
    throw Error(ErrorCode::kContextMismatch,
                "field order " + std::to_string(impl_->q) +
                    " is not a power of " + std::to_string(base_order));
  if (a == 0) return 0;
  // base_order^i mod (q - 1)
  const std::uint64_t n = impl_->q - 1;
  std::uint64_t exponent = 1 % n, b = base_order % n;
  for (std::uint64_t k = i; k > 0; k >>= 1) {
    if (k & 1) exponent = exponent * b % n;
    b = b * b % n;
  }
  return impl_->exp_table[(std::uint64_t{impl_->log_table[a]} * exponent) % n];
}

FieldElement Field::element(Elem value) const { return FieldElement(*this, value); }

bool Field::operator==(const Field& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->p == other.impl_->p && impl_->e == other.impl_->e &&
         impl_->modulus == other.impl_->modulus;
}

std::string Field::spec() const {
  std::ostringstream os;
  os << impl_->p << '^' << impl_->e << '/' << modulus_code();
  return os.str();
}

void require_same_field(const Field& a, const Field& b) {
  if (a != b)
    throw Error(ErrorCode::kContextMismatch, a.spec() + " vs " + b.spec());
}

FieldElement::FieldElement(Field field, Elem value)
    : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_))
    throw Error(ErrorCode::kContextMismatch,
                "value " + std::to_string(value) + " not in " + field_.spec());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::frobenius(std::uint32_t base_order,
                                     std::uint64_t i) const {
  return {field_, field_.frobenius(value_, base_order, i)};
}

Extension Extension::build(const Field& base, std::uint32_t degree) {
  if (degree == 0)
    throw Error(ErrorCode::kConfigInvalid, "extension degree must be >= 1");
  Extension ext(base, Field::create(base.characteristic(), base.degree() * degree),
                degree);
  const Field& big = ext.big_;
  const std::uint32_t p = base.characteristic();
  ext.beta_ = big.degree() > 1 ? p : 1;

  // Smallest root of the base modulus inside the big field.
  const PrimePoly& m = base.modulus();
  std::optional<Elem> root;
  for (Elem r = 0; r < big.order() && !root; ++r) {
    Elem acc = 0;
    for (auto it = m.rbegin(); it != m.rend(); ++it) acc = big.add(big.mul(acc, r), *it);
    if (acc == 0) root = r;
  }
  if (!root) throw Error(ErrorCode::kShapeViolation, "base modulus has no root in extension");

  ext.embed_.resize(base.order());
  for (Elem a = 0; a < base.order(); ++a) {
    const PrimePoly digits = decode_prime_poly(a, p);
    Elem acc = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
      acc = big.add(big.mul(acc, *root), *it);
    ext.embed_[a] = acc;
  }
  // Homomorphism check against the generator covers every product.
  const Elem g = base.primitive();
  for (Elem b = 0; b < base.order(); ++b) {
    if (ext.embed_[base.mul(g, b)] != big.mul(ext.embed_[g], ext.embed_[b]) ||
        ext.embed_[base.add(g, b)] != big.add(ext.embed_[g], ext.embed_[b]))
      throw Error(ErrorCode::kShapeViolation, "embedding is not a homomorphism");
  }

  ext.beta_powers_.resize(degree);
  Elem power = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    ext.beta_powers_[i] = power;
    power = big.mul(power, ext.beta_);
  }

  const std::uint32_t q = base.order();
  ext.inverse_.assign(big.order(), UINT32_MAX);
  std::vector<Elem> coords(degree, 0);
  for (std::uint32_t packed = 0; packed < big.order(); ++packed) {
    std::uint32_t rest = packed;
    for (std::uint32_t i = 0; i < degree; ++i) {
      coords[i] = rest % q;
      rest /= q;
    }
    const Elem y = ext.to_big(coords);
    if (ext.inverse_[y] != UINT32_MAX)
      throw Error(ErrorCode::kShapeViolation, "beta powers are not a basis");
    ext.inverse_[y] = packed;
  }
  return ext;
}

Elem Extension::to_big(std::span<const Elem> coords) const {
  if (coords.size() != degree_)
    throw Error(ErrorCode::kDimensionMismatch, "coordinate vector length");
  Elem acc = 0;
  for (std::uint32_t i = 0; i < degree_; ++i)
    acc = big_.add(acc, big_.mul(embed_.at(coords[i]), beta_powers_[i]));
  return acc;
}

std::vector<Elem> Extension::from_big(Elem y) const {
  if (!big_.contains(y))
    throw Error(ErrorCode::kContextMismatch, "element outside extension field");
  std::uint32_t packed = inverse_[y];
  std::vector<Elem> coords(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    coords[i] = packed % base_.order();
    packed /= base_.order();
  }
  return coords;
}

}  // namespace msp
