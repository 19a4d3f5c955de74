// Copyright 2026 The pconj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pconj {

/// Fixed-length bit vector over F2, packed into 64-bit words.
///
/// Bit 0 is the first character of the textual form. Ordering is
/// lexicographic on that textual form.
class F2Vec {
 public:
  F2Vec() = default;
  explicit F2Vec(std::size_t size);

  static F2Vec from_string(std::string_view bits);
  static F2Vec unit(std::size_t size, std::size_t index);
  static F2Vec ones(std::size_t size);
  static F2Vec concat(const F2Vec& a, const F2Vec& b);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  F2Vec& operator^=(const F2Vec& other);
  F2Vec& operator&=(const F2Vec& other);
  friend F2Vec operator^(F2Vec a, const F2Vec& b) { return a ^= b; }
  friend F2Vec operator&(F2Vec a, const F2Vec& b) { return a &= b; }

  std::size_t popcount() const noexcept;
  bool is_zero() const noexcept;
  /// Parity of the bitwise AND.
  bool dot(const F2Vec& other) const;
  /// Number of positions where both are set, read as an integer.
  std::size_t overlap(const F2Vec& other) const;
  std::optional<std::size_t> first_one() const noexcept;
  /// Indices of set bits in increasing order.
  std::vector<std::size_t> support() const;

  F2Vec slice(std::size_t begin, std::size_t length) const;
  std::string to_string() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  /// Appends `extra` zero bits.
  void grow(std::size_t extra);

  friend bool operator==(const F2Vec& a, const F2Vec& b) = default;
  friend std::strong_ordering operator<=>(const F2Vec& a, const F2Vec& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct F2VecHash {
  std::size_t operator()(const F2Vec& v) const noexcept;
};

/// Rectangular matrix over F2 stored as rows.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);
  F2Matrix(std::vector<F2Vec> rows, std::size_t cols);

  static F2Matrix from_strings(const std::vector<std::string>& rows);
  static F2Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const F2Vec& row(std::size_t i) const { return rows_[i]; }
  F2Vec& row(std::size_t i) { return rows_[i]; }
  const std::vector<F2Vec>& row_list() const noexcept { return rows_; }
  void push_back(F2Vec row);

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  /// Matrix-vector product: component i is row_i . v.
  F2Vec apply(const F2Vec& v) const;
  /// Row-vector product: sum of rows selected by coeffs.
  F2Vec combine(const F2Vec& coeffs) const;
  F2Matrix transpose() const;

  friend bool operator==(const F2Matrix& a, const F2Matrix& b) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<F2Vec> rows_;
};

struct GaussResult {
  F2Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<F2Vec> kernel_basis;
};

/// Reduced row-echelon form with leftmost-column-first pivots taken from the
/// lowest available row.
GaussResult gauss_eliminate(const F2Matrix& m);

std::size_t rank_of(const std::vector<F2Vec>& vectors, std::size_t length);

/// Incremental span solver: expresses vectors in terms of an inserted
/// generator list and reports linear relations among the generators.
class SpanSolver {
 public:
  explicit SpanSolver(std::size_t length) : length_(length) {}

  /// Inserts generator number generator_count(). Returns a nonempty relation
  /// (coefficients over all generators so far) when the new vector is
  /// dependent on the previous ones.
  std::optional<F2Vec> insert(const F2Vec& v);
  /// Coefficients c with sum c_i g_i = v, or nothing if v is outside the span.
  std::optional<F2Vec> solve(const F2Vec& v) const;
  bool contains(const F2Vec& v) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t generator_count() const noexcept { return generators_; }
  std::size_t length() const noexcept { return length_; }

 private:
  struct Row {
    F2Vec vec;
    F2Vec combo;
    std::size_t pivot;
  };
  std::size_t length_;
  std::size_t generators_ = 0;
  std::vector<Row> rows_;
};

/// Element (a_1..a_n | b_1..b_n) of F2^{2n}: the a part selects Z factors,
/// the b part selects X factors.
class SymplecticVec {
 public:
  SymplecticVec() = default;
  explicit SymplecticVec(std::size_t n) : n_(n), bits_(2 * n) {}
  SymplecticVec(const F2Vec& z_part, const F2Vec& x_part);
  static SymplecticVec from_bits(F2Vec bits);
  /// Accepts "a|b" or a plain 2n-character bitstring.
  static SymplecticVec from_string(std::string_view text);
  static SymplecticVec e_z(std::size_t n, std::size_t j);
  static SymplecticVec e_x(std::size_t n, std::size_t j);

  std::size_t n() const noexcept { return n_; }
  bool z(std::size_t j) const noexcept { return bits_.get(j); }
  bool x(std::size_t j) const noexcept { return bits_.get(n_ + j); }
  void set_z(std::size_t j, bool v = true) noexcept { bits_.set(j, v); }
  void set_x(std::size_t j, bool v = true) noexcept { bits_.set(n_ + j, v); }
  F2Vec z_part() const { return bits_.slice(0, n_); }
  F2Vec x_part() const { return bits_.slice(n_, n_); }
  const F2Vec& bits() const noexcept { return bits_; }

  bool is_zero() const noexcept { return bits_.is_zero(); }
  /// Number of wires on which the Pauli acts nontrivially.
  std::size_t weight() const;
  std::vector<std::size_t> wires() const;

  SymplecticVec& operator^=(const SymplecticVec& o);
  friend SymplecticVec operator^(SymplecticVec a, const SymplecticVec& b) { return a ^= b; }

  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const SymplecticVec& a, const SymplecticVec& b) = default;
  friend std::strong_ordering operator<=>(const SymplecticVec& a, const SymplecticVec& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::size_t n_ = 0;
  F2Vec bits_;
};

struct SymplecticVecHash {
  std::size_t operator()(const SymplecticVec& v) const noexcept { return F2VecHash{}(v.bits()); }
};

bool symplectic_form(const SymplecticVec& u, const SymplecticVec& v);

/// Ordered list of linearly independent vectors of F2^{2n}.
class OrderedBasis {
 public:
  OrderedBasis() = default;
  OrderedBasis(std::size_t n, std::vector<SymplecticVec> vectors);

  static OrderedBasis standard_z(std::size_t n, std::size_t r);
  static OrderedBasis standard_x(std::size_t n, std::size_t r);

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return vectors_.size(); }
  bool empty() const noexcept { return vectors_.empty(); }
  bool isotropic() const noexcept { return isotropic_; }
  const SymplecticVec& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<SymplecticVec>& vectors() const noexcept { return vectors_; }

  /// Coordinates of v in this basis, or nothing if v is outside the span.
  std::optional<F2Vec> expand(const SymplecticVec& v) const;
  bool contains(const SymplecticVec& v) const { return expand(v).has_value(); }
  SymplecticVec combine(const F2Vec& coeffs) const;

  friend bool operator==(const OrderedBasis& a, const OrderedBasis& b) {
    return a.n_ == b.n_ && a.vectors_ == b.vectors_;
  }

 private:
  OrderedBasis(std::size_t n, std::vector<SymplecticVec> vectors, bool known_isotropic);

  std::size_t n_ = 0;
  std::vector<SymplecticVec> vectors_;
  bool isotropic_ = true;
  std::shared_ptr<const SpanSolver> solver_;
};

/// Component i is B(x_i, v).
F2Vec anticommutation_map(const OrderedBasis& x, const SymplecticVec& v);

/// Number of basis vectors in the expansion of v; throws if v is outside the span.
std::size_t basis_weight(const OrderedBasis& x, const SymplecticVec& v);

/// offset + span(basis) inside F2^m. The basis is kept in reduced row-echelon
/// form and the offset is reduced against it, so equal sets compare equal.
class AffineSpace {
 public:
  AffineSpace() = default;
  AffineSpace(F2Vec offset, const std::vector<F2Vec>& generators);

  static AffineSpace point(F2Vec p) { return AffineSpace(std::move(p), {}); }

  std::size_t ambient() const noexcept { return offset_.size(); }
  std::size_t dim() const noexcept { return basis_.size(); }
  const F2Vec& offset() const noexcept { return offset_; }
  const std::vector<F2Vec>& basis() const noexcept { return basis_; }

  bool contains(const F2Vec& p) const;
  /// All points; dim must be small enough to enumerate.
  std::vector<F2Vec> points() const;
  void for_each_point(const std::function<void(const F2Vec&)>& fn) const;

  friend bool operator==(const AffineSpace& a, const AffineSpace& b) = default;

 private:
  F2Vec offset_;
  std::vector<F2Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Linear subspace span{x_j : z_j = 1} as an affine space with zero offset.
AffineSpace selected_subspace(const OrderedBasis& x, const F2Vec& z);

std::optional<AffineSpace> affine_intersect(const AffineSpace& a, const AffineSpace& b);

}  // namespace pconj
