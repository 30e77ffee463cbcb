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

#include "multispace/linearized_poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace msp {

namespace {

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap)
      throw Error(ErrorCode::kLimitExceeded,
                  std::to_string(base) + "^" + std::to_string(exp) + " exceeds " +
                      std::to_string(cap));
  }
  return r;
}

// Returns i with base^i == value, if any.
std::optional<std::uint64_t> exact_log(std::uint64_t value, std::uint64_t base) {
  std::uint64_t i = 0, power = 1;
  while (power < value) {
    power *= base;
    ++i;
  }
  if (power == value) return i;
  return std::nullopt;
}

}  // namespace

DensePoly::DensePoly(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_)
    if (!field_.contains(c)) throw Error(ErrorCode::kContextMismatch, "coefficient outside field");
  trim(coeffs_);
}

DensePoly DensePoly::constant(const Field& field, Elem c) { return DensePoly(field, {c}); }

DensePoly DensePoly::linear(const Field& field, Elem root) {
  return DensePoly(field, {field.neg(root), 1});
}

Elem DensePoly::eval(Elem x) const {
  Elem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
  require_same_field(field_, o.field_);
  if (is_zero() || o.is_zero()) return DensePoly(field_, {});
  std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
  }
  return DensePoly(field_, std::move(out));
}

Elem DensePoly::divide_linear(Elem root) {
  if (coeffs_.empty()) return 0;
  // Horner from the top: quotient coefficients overwrite in place.
  std::vector<Elem> quotient(coeffs_.size() - 1, 0);
  Elem carry = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Elem value = field_.add(coeffs_[k], field_.mul(carry, root));
    if (k == 0) {
      coeffs_ = std::move(quotient);
      trim(coeffs_);
      return value;
    }
    quotient[k - 1] = value;
    carry = value;
  }
  return 0;
}

LinearizedPoly::LinearizedPoly(Field big, std::uint32_t base_order,
                               std::map<std::uint64_t, Elem> coeffs)
    : big_(std::move(big)), base_order_(base_order) {
  if (!exact_log(big_.order(), base_order_) || base_order_ < 2)
    throw Error(ErrorCode::kContextMismatch,
                "field order " + std::to_string(big_.order()) + " is not a power of " +
                    std::to_string(base_order_));
  for (auto [i, a] : coeffs) {
    if (!big_.contains(a)) throw Error(ErrorCode::kContextMismatch, "coefficient outside field");
    if (a != 0) coeffs_.emplace(i, a);
  }
}

LinearizedPoly LinearizedPoly::from_dense(const DensePoly& p, std::uint32_t base_order) {
  std::map<std::uint64_t, Elem> coeffs;
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
    if (p.coeffs()[d] == 0) continue;
    auto i = exact_log(d, base_order);
    if (d == 0 || !i)
      throw Error(ErrorCode::kShapeViolation,
                  "nonzero coefficient at degree " + std::to_string(d) +
                      ", not a power of " + std::to_string(base_order));
    coeffs.emplace(*i, p.coeffs()[d]);
  }
  return LinearizedPoly(p.field(), base_order, std::move(coeffs));
}

std::uint64_t LinearizedPoly::q_degree() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

std::uint64_t LinearizedPoly::degree() const {
  if (coeffs_.empty()) return 0;
  return checked_power(base_order_, q_degree(), std::uint64_t{1} << 62);
}

Elem LinearizedPoly::eval(Elem x) const {
  Elem acc = 0;
  for (auto [i, a] : coeffs_) acc = big_.add(acc, big_.mul(a, big_.frobenius(x, base_order_, i)));
  return acc;
}

DensePoly LinearizedPoly::to_dense() const {
  if (coeffs_.empty()) return DensePoly(big_, {});
  const std::uint64_t deg = checked_power(base_order_, q_degree(), kMaxLinearizedDegree);
  std::vector<Elem> dense(deg + 1, 0);
  for (auto [i, a] : coeffs_) dense[checked_power(base_order_, i, deg)] = a;
  return DensePoly(big_, std::move(dense));
}

std::uint32_t LinearizedPoly::coefficient_subfield_degree(std::uint32_t n) const {
  for (std::uint32_t l = 1; l <= n; ++l) {
    if (n % l != 0) continue;
    const bool inside = std::all_of(coeffs_.begin(), coeffs_.end(), [&](const auto& kv) {
      return big_.frobenius(kv.second, base_order_, l) == kv.second;
    });
    if (inside) return l;
  }
  return n;
}

std::string LinearizedPoly::to_text() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second << "*x^" << base_order_ << '^' << it->first;
  }
  return os.str();
}

LinearizedPoly LinearizedPoly::parse_text(const std::string& text, const Field& big,
                                          std::uint32_t base_order) {
  std::map<std::uint64_t, Elem> coeffs;
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact == "0") return LinearizedPoly(big, base_order, {});
  std::istringstream terms(compact);
  std::string term;
  while (std::getline(terms, term, '+')) {
    // The literal "q" stands for the base order.
    if (const auto at = term.find("x^q^"); at != std::string::npos)
      term.replace(at + 2, 1, std::to_string(base_order));
    unsigned long long a = 0, q = 0, i = 0;
    char tail = 0;
    if (std::sscanf(term.c_str(), "%llu*x^%llu^%llu%c", &a, &q, &i, &tail) != 3)
      throw Error(ErrorCode::kParseError, "bad linearized term '" + term + "'");
    if (q != base_order)
      throw Error(ErrorCode::kParseError,
                  "term '" + term + "' uses base " + std::to_string(q) + ", expected " +
                      std::to_string(base_order));
    if (!big.contains(static_cast<Elem>(a)) || a > UINT32_MAX)
      throw Error(ErrorCode::kParseError, "coefficient out of field in '" + term + "'");
    Elem& slot = coeffs[i];
    slot = big.add(slot, static_cast<Elem>(a));
  }
  return LinearizedPoly(big, base_order, std::move(coeffs));
}

LinearizedPoly poly_from_multispace(const Multispace& w, const Extension& ext) {
  require_same_field(w.field(), ext.base());
  if (w.ambient_dim() != ext.degree())
    throw Error(ErrorCode::kDimensionMismatch,
                "multispace over F_q^" + std::to_string(w.ambient_dim()) +
                    " with extension of degree " + std::to_string(ext.degree()));
  const std::uint32_t q = ext.base().order();
  const std::uint64_t deg = checked_power(q, w.rank(), kMaxLinearizedDegree);
  const Field& big = ext.big();

  DensePoly product = DensePoly::constant(big, 1);
  for (const FqVector& v : w.underlying().elements())
    product = product * DensePoly::linear(big, ext.to_big(v.coords()));

  // f(x)^(q^t) = sum f_j^(q^t) x^(j q^t) in characteristic p.
  const std::uint64_t spread = checked_power(q, w.height(), kMaxLinearizedDegree);
  std::vector<Elem> raised(deg + 1, 0);
  for (std::size_t j = 0; j < product.coeffs().size(); ++j)
    raised[j * spread] = big.frobenius(product.coeffs()[j], q, w.height());
  DensePoly expanded(big, std::move(raised));
  if (static_cast<std::uint64_t>(expanded.degree()) != deg)
    throw Error(ErrorCode::kShapeViolation, "expansion has the wrong degree");
  return LinearizedPoly::from_dense(expanded, q);
}

Multispace roots_multiset(const LinearizedPoly& poly, const Extension& ext) {
  const Field& big = ext.big();
  require_same_field(poly.field(), big);
  const std::uint32_t q = ext.base().order();
  if (poly.base_order() != q)
    throw Error(ErrorCode::kContextMismatch, "polynomial base differs from extension base");
  if (poly.is_zero()) throw Error(ErrorCode::kNotAMultispace, "zero polynomial");

  DensePoly rest = poly.to_dense();
  const auto deg = static_cast<std::uint64_t>(rest.degree());

  std::vector<Elem> roots;
  for (Elem y = 0; y < big.order(); ++y)
    if (poly.eval(y) == 0) roots.push_back(y);

  std::optional<std::uint64_t> multiplicity;
  std::uint64_t total = 0;
  for (Elem r : roots) {
    std::uint64_t mu = 0;
    while (!rest.is_zero() && rest.degree() > 0) {
      DensePoly trial = rest;
      if (trial.divide_linear(r) != 0) break;
      rest = std::move(trial);
      ++mu;
    }
    total += mu;
    if (multiplicity && *multiplicity != mu)
      throw Error(ErrorCode::kNotAMultispace, "roots have unequal multiplicities");
    multiplicity = mu;
  }
  if (total != deg)
    throw Error(ErrorCode::kRootsNotInField,
                std::to_string(total) + " of " + std::to_string(deg) +
                    " roots lie in " + big.spec());

  auto height = exact_log(*multiplicity, q);
  if (!height) throw Error(ErrorCode::kNotAMultispace, "multiplicity is not a power of q");

  VectorMultiset root_vectors(ext.base(), ext.degree());
  for (Elem r : roots) root_vectors.push_back(FqVector(ext.base(), ext.from_big(r)));
  Subspace support = span(root_vectors);
  if (checked_power(q, support.dim(), UINT64_MAX / 2) != roots.size())
    throw Error(ErrorCode::kNotAMultispace, "roots do not form a subspace");
  return Multispace(std::move(support), static_cast<std::size_t>(*height));
}

}  // namespace msp
