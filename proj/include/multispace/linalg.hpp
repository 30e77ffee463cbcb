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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "multispace/finite_field.hpp"

namespace msp {

// Full-lattice operations refuse ambient spaces with more than this many
// vectors unless the caller passes a larger limit.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 1ull << 20;

class FqVector {
 public:
  FqVector(Field field, std::vector<Elem> coords);

  static FqVector zero(const Field& field, std::size_t n);
  static FqVector unit(const Field& field, std::size_t n, std::size_t i);
  // Coordinates are the base-q digits of index, coordinate 0 least significant.
  static FqVector from_index(const Field& field, std::size_t n, std::uint64_t index);

  const Field& field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  Elem operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Elem> coords() const { return coords_; }
  bool is_zero() const;
  std::uint64_t index() const;

  FqVector operator+(const FqVector& o) const;
  FqVector scaled(Elem c) const;

  bool operator==(const FqVector& o) const {
    return coords_ == o.coords_ && field_ == o.field_;
  }
  bool operator<(const FqVector& o) const { return coords_ < o.coords_; }

 private:
  Field field_;
  std::vector<Elem> coords_;
};

class FqMatrix {
 public:
  FqMatrix(Field field, std::size_t rows, std::size_t cols);
  FqMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static FqMatrix identity(const Field& field, std::size_t n);
  static FqMatrix from_rows(const Field& field, std::size_t cols,
                            const std::vector<std::vector<Elem>>& rows);
  static FqMatrix from_vectors(const Field& field, std::size_t cols,
                               std::span<const FqVector> vectors);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v);
  std::span<const Elem> row(std::size_t r) const {
    return std::span<const Elem>(data_).subspan(r * cols_, cols_);
  }
  FqVector row_vector(std::size_t r) const;
  std::vector<std::vector<Elem>> to_rows() const;
  const std::vector<Elem>& data() const { return data_; }

  FqMatrix transpose() const;
  FqMatrix operator*(const FqMatrix& o) const;  // kShapeMismatch

  bool operator==(const FqMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
           field_ == o.field_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct RrefResult {
  FqMatrix matrix;  // zero rows removed
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FqMatrix& m);
bool is_rref(const FqMatrix& m);  // also rejects zero rows

// Ordered multiset of vectors; order matters only to channel transforms.
class VectorMultiset {
 public:
  VectorMultiset(Field field, std::size_t n, std::vector<FqVector> vectors = {});

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<FqVector>& vectors() const { return vectors_; }
  const FqVector& operator[](std::size_t i) const { return vectors_[i]; }
  void push_back(FqVector v);
  // Rows of an size() x n matrix.
  FqMatrix as_matrix() const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<FqVector> vectors_;
};

// Canonical subspace of F_q^n: RREF basis without zero rows.
class Subspace {
 public:
  static Subspace zero(const Field& field, std::size_t n);
  static Subspace full(const Field& field, std::size_t n);
  // Row space of m.
  static Subspace row_space(const FqMatrix& m);
  // Accepts m only if it is already in RREF with no zero rows (kNotCanonical).
  static Subspace from_rref(const FqMatrix& m);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FqMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const FqVector& v) const;
  // All q^dim elements, in coefficient odometer order.
  std::vector<FqVector> elements() const;

  std::uint64_t hash() const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  // Ascending dimension, then basis entries; used for deterministic sorting.
  bool operator<(const Subspace& o) const;

 private:
  explicit Subspace(FqMatrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  FqMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace span(const VectorMultiset& vectors);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
// Zassenhaus: RREF of [[A, A], [B, 0]]; rows with zero left half span A ∩ B.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const FqVector& v);
bool subspace_leq(const Subspace& a, const Subspace& b);
// dim a + dim b - 2 dim(a ∩ b)
std::size_t subspace_distance(const Subspace& a, const Subspace& b);

// Throws kLimitExceeded when q^n > limit.
void check_enumeration_limit(const Field& field, std::size_t n, std::uint64_t limit);

// Streams every k-dimensional subspace of F_q^n once: pivot sets in
// lexicographic order, then free RREF entries in odometer order (last entry
// fastest).
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(Field field, std::size_t n, std::size_t k,
                     std::uint64_t limit = kDefaultEnumerationLimit);

  std::optional<Subspace> next();

 private:
  bool load_pivots();
  bool advance_pivots();
  bool advance_free();

  Field field_;
  std::size_t n_;
  std::size_t k_;
  bool done_ = false;
  bool fresh_ = true;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;  // (row, col)
  std::vector<Elem> digits_;
};

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n,
                                          std::size_t k,
                                          std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace msp
