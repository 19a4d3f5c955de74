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


#include "pconj/exact.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <sstream>
#include <stdexcept>

namespace pconj {

namespace {

// x * sqrt2 with sqrt2 = w - w^3.
std::array<BigInt, 4> times_sqrt2(const std::array<BigInt, 4>& c) {
  return {c[1] - c[3], c[0] + c[2], c[1] + c[3], c[2] - c[0]};
}

bool is_even(const BigInt& x) { return !boost::multiprecision::bit_test(x, 0); }

void lift(std::array<BigInt, 4>& c, std::int64_t steps) {
  for (auto& v : c) v <<= static_cast<unsigned>(steps / 2);
  if (steps % 2 != 0) c = times_sqrt2(c);
}

}  // namespace

std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(x)) + 1;
}

ExactScalar::ExactScalar(std::int64_t value) : c_{BigInt(value), 0, 0, 0}, k_(0) {}

ExactScalar::ExactScalar(BigInt c0, BigInt c1, BigInt c2, BigInt c3, std::int64_t denom_exp)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}, k_(denom_exp) {
  normalize();
}

ExactScalar ExactScalar::omega_power(int p) { return ExactScalar(1).times_omega(p); }

ExactScalar ExactScalar::inv_sqrt2_power(std::int64_t k) { return ExactScalar(1).scaled(k); }

ExactScalar ExactScalar::sqrt2() { return ExactScalar(0, 1, 0, -1, 0); }

void ExactScalar::normalize() {
  if (k_ < 0) {
    lift(c_, -k_);
    k_ = 0;
  }
  if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0) {
    k_ = 0;
    return;
  }
  // Strip factors of 2 first, then at most one sqrt2.
  while (k_ >= 2 && is_even(c_[0]) && is_even(c_[1]) && is_even(c_[2]) && is_even(c_[3])) {
    for (auto& v : c_) v >>= 1;
    k_ -= 2;
  }
  while (k_ > 0 && is_even(c_[0] - c_[2]) && is_even(c_[1] - c_[3])) {
    auto t = times_sqrt2(c_);
    for (auto& v : t) v /= 2;
    c_ = std::move(t);
    --k_;
  }
}

bool ExactScalar::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

bool ExactScalar::is_real() const { return c_[2] == 0 && c_[3] == -c_[1]; }

ExactScalar ExactScalar::conj() const {
  ExactScalar r = *this;
  r.c_ = {c_[0], -c_[3], -c_[2], -c_[1]};
  return r;
}

ExactScalar ExactScalar::times_omega(int p) const {
  ExactScalar r = *this;
  p = ((p % 8) + 8) % 8;
  for (int i = 0; i < p; ++i) r.c_ = {-r.c_[3], r.c_[0], r.c_[1], r.c_[2]};
  return r;
}

ExactScalar ExactScalar::scaled(std::int64_t k) const {
  ExactScalar r = *this;
  r.k_ += k;
  r.normalize();
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  auto rhs = o.c_;
  if (k_ < o.k_) {
    lift(c_, o.k_ - k_);
    k_ = o.k_;
  } else if (o.k_ < k_) {
    lift(rhs, k_ - o.k_);
  }
  for (std::size_t i = 0; i < 4; ++i) c_[i] += rhs[i];
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  std::array<BigInt, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      BigInt p = c_[i] * o.c_[j];
      const std::size_t e = i + j;
      if (e < 4) {
        r[e] += p;
      } else {
        r[e - 4] -= p;
      }
    }
  }
  c_ = std::move(r);
  k_ += o.k_;
  normalize();
  return *this;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

std::complex<double> ExactScalar::to_complex() const {
  // Wide floats absorb the cancellation between large coefficients.
  using Wide = boost::multiprecision::cpp_bin_float_100;
  const Wide h = boost::multiprecision::sqrt(Wide(0.5));
  const Wide scale = boost::multiprecision::pow(h, static_cast<int>(k_));
  const Wide re = (Wide(c_[0]) + h * Wide(c_[1] - c_[3])) * scale;
  const Wide im = (Wide(c_[2]) + h * Wide(c_[1] + c_[3])) * scale;
  return {re.convert_to<double>(), im.convert_to<double>()};
}

std::string ExactScalar::to_string() const {
  std::ostringstream os;
  os << '(' << c_[0] << ',' << c_[1] << ',' << c_[2] << ',' << c_[3] << ")/sqrt2^" << k_;
  return os.str();
}

RealRoot2::RealRoot2(std::int64_t value) : a_(value), b_(0), l_(0) {}

RealRoot2::RealRoot2(BigInt a, BigInt b, std::int64_t denom_exp)
    : a_(std::move(a)), b_(std::move(b)), l_(denom_exp) {
  normalize();
}

RealRoot2 RealRoot2::inv_sqrt2_power(std::int64_t m) {
  if (m >= 0) {
    if (m % 2 == 0) return RealRoot2(1, 0, m / 2);
    return RealRoot2(0, 1, (m + 1) / 2);
  }
  const std::int64_t p = -m;
  BigInt two_pow = BigInt(1) << static_cast<unsigned>(p / 2);
  if (p % 2 == 0) return RealRoot2(two_pow, 0, 0);
  return RealRoot2(0, two_pow, 0);
}

void RealRoot2::normalize() {
  if (l_ < 0) {
    a_ <<= static_cast<unsigned>(-l_);
    b_ <<= static_cast<unsigned>(-l_);
    l_ = 0;
  }
  if (is_zero()) {
    l_ = 0;
    return;
  }
  while (l_ > 0 && is_even(a_) && is_even(b_)) {
    a_ >>= 1;
    b_ >>= 1;
    --l_;
  }
}

int RealRoot2::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with 2 b^2
  const BigInt lhs = a_ * a_;
  const BigInt rhs = 2 * b_ * b_;
  return lhs > rhs ? sa : sb;
}

RealRoot2& RealRoot2::operator+=(const RealRoot2& o) {
  BigInt oa = o.a_;
  BigInt ob = o.b_;
  if (l_ < o.l_) {
    a_ <<= static_cast<unsigned>(o.l_ - l_);
    b_ <<= static_cast<unsigned>(o.l_ - l_);
    l_ = o.l_;
  } else if (o.l_ < l_) {
    oa <<= static_cast<unsigned>(l_ - o.l_);
    ob <<= static_cast<unsigned>(l_ - o.l_);
  }
  a_ += oa;
  b_ += ob;
  normalize();
  return *this;
}

RealRoot2& RealRoot2::operator-=(const RealRoot2& o) { return *this += -o; }

RealRoot2& RealRoot2::operator*=(const RealRoot2& o) {
  BigInt na = a_ * o.a_ + 2 * b_ * o.b_;
  BigInt nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  l_ += o.l_;
  normalize();
  return *this;
}

ExactScalar RealRoot2::to_exact() const { return ExactScalar(a_, b_, 0, -b_, 2 * l_); }

double RealRoot2::to_double() const {
  using Wide = boost::multiprecision::cpp_bin_float_100;
  const Wide v = (Wide(a_) + boost::multiprecision::sqrt(Wide(2)) * Wide(b_)) / boost::multiprecision::pow(Wide(2), static_cast<int>(l_));
  return v.convert_to<double>();
}

std::string RealRoot2::to_string() const {
  std::ostringstream num;
  std::size_t terms = 0;
  if (a_ != 0) {
    num << a_;
    ++terms;
  }
  if (b_ != 0) {
    if (terms > 0) num << (b_ > 0 ? "+" : "-");
    else if (b_ < 0) num << '-';
    const BigInt mag = b_ < 0 ? BigInt(-b_) : b_;
    if (mag != 1) num << mag << '*';
    num << "sqrt2";
    ++terms;
  }
  if (terms == 0) return "0";
  if (l_ == 0) return num.str();
  const std::string top = terms > 1 ? "(" + num.str() + ")" : num.str();
  return top + "/" + (BigInt(1) << static_cast<unsigned>(l_)).str();
}

RealRoot2 gb_value(const GBRoot2Expr& e) {
  if (e.signs.size() != e.mask.size()) throw std::invalid_argument("GBRoot2Expr: signs and mask differ in length");
  BigInt a = 0;
  BigInt b = 0;
  for (auto j : e.mask.support()) {
    BigInt term = BigInt(1) << static_cast<unsigned>(j / 2);
    if (e.signs.get(j)) term = -term;
    if (j % 2 == 0) {
      a += term;
    } else {
      b += term;
    }
  }
  return RealRoot2(std::move(a), std::move(b), 0);
}

GBRoot2Expr gb_from_value(const RealRoot2& r) {
  if (r.denom_exp() != 0) throw std::invalid_argument("gb_from_value: value has a nonzero denominator");
  const std::size_t la = bit_length(r.a());
  const std::size_t lb = bit_length(r.b());
  const std::size_t len = std::max(la == 0 ? 0 : 2 * la - 1, lb == 0 ? 0 : 2 * lb);
  GBRoot2Expr e{F2Vec(len), F2Vec(len)};
  const BigInt abs_a = boost::multiprecision::abs(r.a());
  const BigInt abs_b = boost::multiprecision::abs(r.b());
  for (std::size_t i = 0; i < la; ++i) {
    if (boost::multiprecision::bit_test(abs_a, static_cast<unsigned>(i))) {
      e.mask.set(2 * i);
      e.signs.set(2 * i, r.a() < 0);
    }
  }
  for (std::size_t i = 0; i < lb; ++i) {
    if (boost::multiprecision::bit_test(abs_b, static_cast<unsigned>(i))) {
      e.mask.set(2 * i + 1);
      e.signs.set(2 * i + 1, r.b() < 0);
    }
  }
  return e;
}

}  // namespace pconj
