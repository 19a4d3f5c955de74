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

#include <string>
#include <vector>

#include "pconj/exact.hpp"

namespace pconj {

/// a + b sqrt2 with rational a, b: the field Q(sqrt2).
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(std::int64_t v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 from(const RealRoot2& r);
  /// Throws invalid_argument if x is not real.
  static QSqrt2 from(const ExactScalar& x);

  const BigRational& a() const noexcept { return a_; }
  const BigRational& b() const noexcept { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QSqrt2 inverse() const;
  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }
  QSqrt2 operator-() const { return {-a_, -b_}; }
  friend bool operator==(const QSqrt2&, const QSqrt2&) = default;

  /// Exact conversion; throws domain_error unless both denominators are powers of two.
  RealRoot2 to_real_root2() const;
  std::string to_string() const;

 private:
  BigRational a_ = 0;
  BigRational b_ = 0;
};

/// (1/sqrt2)^e, e may be negative.
QSqrt2 inv_sqrt2_pow(std::int64_t e);

/// Nodes (1/sqrt2)^{4i+1} for i = 0..n.
std::vector<QSqrt2> weight_nodes(std::size_t n);

/// prod_{j=1..n} (1 - (1/sqrt2)^{4j}).
QSqrt2 vandermonde_beta(std::size_t n);

/// Inverse of the matrix with rows (1, x_i, x_i^2, ...), by the Lagrange
/// formula. Entry [t][j] multiplies the value at node j in coefficient t.
std::vector<std::vector<QSqrt2>> vandermonde_inverse(const std::vector<QSqrt2>& nodes);

/// Row t of the inverse for the weight nodes, scaled by beta. Every entry is
/// d / 2^l with d in Z[sqrt2].
std::vector<RealRoot2> vandermonde_inverse_row(std::size_t n, std::size_t t);

/// Integer coefficients c with sum_j c_j x_i^j = values_i. Throws
/// domain_error if the solution is not integral.
std::vector<BigInt> vandermonde_solve_integer(const std::vector<QSqrt2>& nodes, const std::vector<QSqrt2>& values);

}  // namespace pconj
