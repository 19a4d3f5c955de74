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

#include <array>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pconj/f2.hpp"

namespace pconj {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Element of Z[omega, 1/sqrt2] with omega = e^{i pi/4}:
/// (c0 + c1 w + c2 w^2 + c3 w^3) / sqrt2^k with k minimal.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
  ExactScalar(BigInt c0, BigInt c1, BigInt c2, BigInt c3, std::int64_t denom_exp);

  static ExactScalar omega_power(int p);
  /// 1 / sqrt2^k.
  static ExactScalar inv_sqrt2_power(std::int64_t k);
  static ExactScalar sqrt2();

  const BigInt& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::int64_t denom_exp() const noexcept { return k_; }

  bool is_zero() const;
  bool is_real() const;
  bool is_one() const { return *this == ExactScalar(1); }

  ExactScalar conj() const;
  /// Multiply by omega^p.
  ExactScalar times_omega(int p) const;
  /// Divide by sqrt2^k (k may be negative).
  ExactScalar scaled(std::int64_t k) const;
  /// |x|^2, always real.
  ExactScalar norm() const { return *this * conj(); }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) = default;

  std::complex<double> to_complex() const;
  /// "(c0,c1,c2,c3)/sqrt2^k".
  std::string to_string() const;

 private:
  void normalize();

  std::array<BigInt, 4> c_{};
  std::int64_t k_ = 0;
};

/// (a + b sqrt2) / 2^l, normalized so a and b are not both even when l > 0.
class RealRoot2 {
 public:
  RealRoot2() = default;
  RealRoot2(std::int64_t value);  // NOLINT(google-explicit-constructor)
  RealRoot2(BigInt a, BigInt b, std::int64_t denom_exp = 0);

  /// 1/sqrt2^m as an element of this ring.
  static RealRoot2 inv_sqrt2_power(std::int64_t m);

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  std::int64_t denom_exp() const noexcept { return l_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// Sign of the real value: -1, 0 or 1.
  int sign() const;

  RealRoot2& operator+=(const RealRoot2& o);
  RealRoot2& operator-=(const RealRoot2& o);
  RealRoot2& operator*=(const RealRoot2& o);
  friend RealRoot2 operator+(RealRoot2 x, const RealRoot2& y) { return x += y; }
  friend RealRoot2 operator-(RealRoot2 x, const RealRoot2& y) { return x -= y; }
  friend RealRoot2 operator*(RealRoot2 x, const RealRoot2& y) { return x *= y; }
  RealRoot2 operator-() const { return RealRoot2(-a_, -b_, l_); }

  friend bool operator==(const RealRoot2& x, const RealRoot2& y) = default;

  ExactScalar to_exact() const;
  double to_double() const;
  std::string to_string() const;

 private:
  void normalize();

  BigInt a_ = 0;
  BigInt b_ = 0;
  std::int64_t l_ = 0;
};

/// Signed base-sqrt2 digit string: value = sum_j (-1)^{signs_j} mask_j sqrt2^j.
struct GBRoot2Expr {
  F2Vec signs;
  F2Vec mask;

  std::size_t length() const noexcept { return mask.size(); }
  friend bool operator==(const GBRoot2Expr&, const GBRoot2Expr&) = default;
};

RealRoot2 gb_value(const GBRoot2Expr& e);
/// Inverse of gb_value for elements of Z[sqrt2]. Even positions carry the
/// binary digits of a, odd positions those of b.
GBRoot2Expr gb_from_value(const RealRoot2& r);

inline std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RealRoot2& x) { return os << x.to_string(); }

/// Bit length of |x| (0 for x = 0).
std::size_t bit_length(const BigInt& x);

}  // namespace pconj
