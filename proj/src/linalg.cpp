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

#include "multispace/linalg.hpp"

#include <algorithm>

namespace msp {

FqVector::FqVector(Field field, std::vector<Elem> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  for (Elem c : coords_)
    if (!field_.contains(c))
      throw Error(ErrorCode::kContextMismatch,
                  "coordinate " + std::to_string(c) + " not in " + field_.spec());
}

FqVector FqVector::zero(const Field& field, std::size_t n) {
  return FqVector(field, std::vector<Elem>(n, 0));
}

FqVector FqVector::unit(const Field& field, std::size_t n, std::size_t i) {
  std::vector<Elem> c(n, 0);
  c.at(i) = 1;
  return FqVector(field, std::move(c));
}

FqVector FqVector::from_index(const Field& field, std::size_t n, std::uint64_t index) {
  std::vector<Elem> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = static_cast<Elem>(index % field.order());
    index /= field.order();
  }
  return FqVector(field, std::move(c));
}

bool FqVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Elem c) { return c == 0; });
}

std::uint64_t FqVector::index() const {
  std::uint64_t idx = 0;
  for (auto it = coords_.rbegin(); it != coords_.rend(); ++it)
    idx = idx * field_.order() + *it;
  return idx;
}

FqVector FqVector::operator+(const FqVector& o) const {
  require_same_field(field_, o.field_);
  if (size() != o.size())
    throw Error(ErrorCode::kDimensionMismatch, "vector lengths differ");
  std::vector<Elem> c(size());
  for (std::size_t i = 0; i < size(); ++i) c[i] = field_.add(coords_[i], o.coords_[i]);
  return FqVector(field_, std::move(c));
}

FqVector FqVector::scaled(Elem s) const {
  std::vector<Elem> c(size());
  for (std::size_t i = 0; i < size(); ++i) c[i] = field_.mul(coords_[i], s);
  return FqVector(field_, std::move(c));
}

FqMatrix::FqMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix::FqMatrix(Field field, std::size_t rows, std::size_t cols,
                   std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorCode::kShapeMismatch, "matrix data size");
  for (Elem c : data_)
    if (!field_.contains(c))
      throw Error(ErrorCode::kContextMismatch, "matrix entry outside field");
}

FqMatrix FqMatrix::identity(const Field& field, std::size_t n) {
  FqMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(const Field& field, std::size_t cols,
                             const std::vector<std::vector<Elem>>& rows) {
  std::vector<Elem> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols)
      throw Error(ErrorCode::kDimensionMismatch,
                  "row of length " + std::to_string(r.size()) + ", expected " +
                      std::to_string(cols));
    data.insert(data.end(), r.begin(), r.end());
  }
  return FqMatrix(field, rows.size(), cols, std::move(data));
}

FqMatrix FqMatrix::from_vectors(const Field& field, std::size_t cols,
                                std::span<const FqVector> vectors) {
  std::vector<Elem> data;
  data.reserve(vectors.size() * cols);
  for (const auto& v : vectors) {
    require_same_field(field, v.field());
    if (v.size() != cols)
      throw Error(ErrorCode::kDimensionMismatch, "vector length differs from ambient dimension");
    data.insert(data.end(), v.coords().begin(), v.coords().end());
  }
  return FqMatrix(field, vectors.size(), cols, std::move(data));
}

void FqMatrix::set(std::size_t r, std::size_t c, Elem v) {
  if (!field_.contains(v)) throw Error(ErrorCode::kContextMismatch, "entry outside field");
  data_.at(r * cols_ + c) = v;
}

FqVector FqMatrix::row_vector(std::size_t r) const {
  auto rw = row(r);
  return FqVector(field_, std::vector<Elem>(rw.begin(), rw.end()));
}

std::vector<std::vector<Elem>> FqMatrix::to_rows() const {
  std::vector<std::vector<Elem>> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    auto rw = row(r);
    out.emplace_back(rw.begin(), rw.end());
  }
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  return t;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  require_same_field(field_, o.field_);
  if (cols_ != o.rows_)
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(rows_) + "x" + std::to_string(cols_) + " times " +
                    std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  FqMatrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.data_[i * o.cols_ + j] =
            field_.add(out.data_[i * o.cols_ + j], field_.mul(a, o.at(k, j)));
    }
  return out;
}

RrefResult rref(const FqMatrix& m) {
  const Field& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Elem> a = m.data();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols,
                       a.begin() + r * cols);
    const Elem s = f.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem factor = a[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r * cols);
  return {FqMatrix(f, r, cols, std::move(a)), r, std::move(pivots)};
}

bool is_rref(const FqMatrix& m) {
  std::size_t last_pivot = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t c = 0;
    while (c < m.cols() && m.at(r, c) == 0) ++c;
    if (c == m.cols()) return false;
    if (m.at(r, c) != 1) return false;
    if (r > 0 && c <= last_pivot) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m.at(i, c) != 0) return false;
    last_pivot = c;
  }
  return true;
}

VectorMultiset::VectorMultiset(Field field, std::size_t n, std::vector<FqVector> vectors)
    : field_(std::move(field)), n_(n), vectors_() {
  vectors_.reserve(vectors.size());
  for (auto& v : vectors) push_back(std::move(v));
}

void VectorMultiset::push_back(FqVector v) {
  require_same_field(field_, v.field());
  if (v.size() != n_)
    throw Error(ErrorCode::kDimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in F_q^" +
                    std::to_string(n_));
  vectors_.push_back(std::move(v));
}

FqMatrix VectorMultiset::as_matrix() const {
  return FqMatrix::from_vectors(field_, n_, vectors_);
}

Subspace Subspace::zero(const Field& field, std::size_t n) {
  return Subspace(FqMatrix(field, 0, n), {});
}

Subspace Subspace::full(const Field& field, std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return Subspace(FqMatrix::identity(field, n), std::move(piv));
}

Subspace Subspace::row_space(const FqMatrix& m) {
  auto res = rref(m);
  return Subspace(std::move(res.matrix), std::move(res.pivots));
}

Subspace Subspace::from_rref(const FqMatrix& m) {
  if (!is_rref(m))
    throw Error(ErrorCode::kNotCanonical, "basis is not in reduced row echelon form");
  return row_space(m);
}

bool Subspace::contains(const FqVector& v) const {
  require_same_field(field(), v.field());
  if (v.size() != ambient_dim())
    throw Error(ErrorCode::kDimensionMismatch, "vector length differs from ambient dimension");
  // Reduce v against the RREF basis: the coefficient of row r is v[pivot_r].
  const Field& f = field();
  std::vector<Elem> rest(v.coords().begin(), v.coords().end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Elem c = rest[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      rest[j] = f.sub(rest[j], f.mul(c, basis_.at(r, j)));
  }
  return std::all_of(rest.begin(), rest.end(), [](Elem x) { return x == 0; });
}

std::vector<FqVector> Subspace::elements() const {
  const Field& f = field();
  const std::uint64_t q = f.order();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim(); ++i) count *= q;
  std::vector<FqVector> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Elem> acc(ambient_dim(), 0);
    std::uint64_t rest = idx;
    for (std::size_t r = 0; r < dim(); ++r) {
      const Elem c = static_cast<Elem>(rest % q);
      rest /= q;
      if (c == 0) continue;
      for (std::size_t j = 0; j < ambient_dim(); ++j)
        acc[j] = f.add(acc[j], f.mul(c, basis_.at(r, j)));
    }
    out.emplace_back(f, std::move(acc));
  }
  return out;
}

std::uint64_t Subspace::hash() const {
  // FNV-1a over (n, dim, entries).
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(ambient_dim());
  mix(dim());
  for (Elem e : basis_.data()) mix(e);
  return h;
}

bool Subspace::operator<(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  if (pivots_ != o.pivots_) return pivots_ < o.pivots_;
  return basis_.data() < o.basis_.data();
}

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  require_same_field(a.field(), b.field());
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::kDimensionMismatch,
                "ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                    std::to_string(b.ambient_dim()));
}

}  // namespace

Subspace span(const VectorMultiset& vectors) {
  return Subspace::row_space(vectors.as_matrix());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::vector<Elem> data = a.basis().data();
  data.insert(data.end(), b.basis().data().begin(), b.basis().data().end());
  return Subspace::row_space(
      FqMatrix(a.field(), a.dim() + b.dim(), a.ambient_dim(), std::move(data)));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const std::size_t n = a.ambient_dim();
  FqMatrix block(a.field(), a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      block.set(r, c, a.basis().at(r, c));
      block.set(r, n + c, a.basis().at(r, c));
    }
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) block.set(a.dim() + r, c, b.basis().at(r, c));
  const auto reduced = rref(block);
  std::vector<Elem> data;
  std::size_t rows = 0;
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    if (reduced.pivots[r] < n) continue;
    auto rw = reduced.matrix.row(r);
    data.insert(data.end(), rw.begin() + n, rw.end());
    ++rows;
  }
  return Subspace::row_space(FqMatrix(a.field(), rows, n, std::move(data)));
}

bool contains(const Subspace& a, const FqVector& v) { return a.contains(v); }

bool subspace_leq(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (a.dim() > b.dim()) return false;
  for (std::size_t r = 0; r < a.dim(); ++r)
    if (!b.contains(a.basis().row_vector(r))) return false;
  return true;
}

std::size_t subspace_distance(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - 2 * subspace_intersect(a, b).dim();
}

void check_enumeration_limit(const Field& field, std::size_t n, std::uint64_t limit) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= field.order();
    if (size > limit)
      throw Error(ErrorCode::kLimitExceeded,
                  "q^n = " + std::to_string(field.order()) + "^" + std::to_string(n) +
                      " exceeds enumeration limit " + std::to_string(limit));
  }
}

SubspaceEnumerator::SubspaceEnumerator(Field field, std::size_t n, std::size_t k,
                                       std::uint64_t limit)
    : field_(std::move(field)), n_(n), k_(k) {
  check_enumeration_limit(field_, n_, limit);
  if (k_ > n_) {
    done_ = true;
    return;
  }
  pivots_.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) pivots_[i] = i;
  load_pivots();
}

bool SubspaceEnumerator::load_pivots() {
  free_.clear();
  for (std::size_t r = 0; r < k_; ++r)
    for (std::size_t c = pivots_[r] + 1; c < n_; ++c)
      if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_.emplace_back(r, c);
  digits_.assign(free_.size(), 0);
  return true;
}

bool SubspaceEnumerator::advance_pivots() {
  // Next k-combination of {0..n-1} in lexicographic order.
  if (k_ == 0) return false;
  std::size_t i = k_;
  while (i > 0) {
    --i;
    if (pivots_[i] < n_ - k_ + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      return load_pivots();
    }
  }
  return false;
}

bool SubspaceEnumerator::advance_free() {
  std::size_t i = digits_.size();
  while (i > 0) {
    --i;
    if (digits_[i] + 1 < field_.order()) {
      ++digits_[i];
      return true;
    }
    digits_[i] = 0;
  }
  return false;
}

std::optional<Subspace> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  if (!fresh_ && !advance_free() && !advance_pivots()) {
    done_ = true;
    return std::nullopt;
  }
  fresh_ = false;
  FqMatrix m(field_, k_, n_);
  for (std::size_t r = 0; r < k_; ++r) m.set(r, pivots_[r], 1);
  for (std::size_t i = 0; i < free_.size(); ++i)
    m.set(free_[i].first, free_[i].second, digits_[i]);
  return Subspace::from_rref(m);
}

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n,
                                          std::size_t k, std::uint64_t limit) {
  SubspaceEnumerator en(field, n, k, limit);
  std::vector<Subspace> out;
  while (auto s = en.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace msp
