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


#include "pconj/vandermonde.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace pconj {

namespace {

BigRational pow2(std::int64_t e) {
  if (e >= 0) return BigRational(BigInt(1) << e);
  return BigRational(BigInt(1), BigInt(1) << (-e));
}

// Exponent e with x = m / 2^e for integer m; nothing if the denominator is not a power of two.
std::optional<std::int64_t> two_adic_denominator(const BigRational& x) {
  BigInt d = boost::multiprecision::denominator(x);
  std::int64_t e = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++e;
  }
  if (d != 1) return std::nullopt;
  return e;
}

}  // namespace

QSqrt2 QSqrt2::from(const RealRoot2& r) {
  const BigRational scale = pow2(-r.denom_exp());
  return {BigRational(r.a()) * scale, BigRational(r.b()) * scale};
}

QSqrt2 QSqrt2::from(const ExactScalar& x) {
  if (!x.is_real()) throw std::invalid_argument("QSqrt2: value is not real");
  // Real part c0 + c1 (w - w^3) = c0 + c1 sqrt2, divided by sqrt2^k.
  QSqrt2 num(BigRational(x.coeff(0)), BigRational(x.coeff(1)));
  return num * inv_sqrt2_pow(x.denom_exp());
}

QSqrt2 QSqrt2::inverse() const {
  const BigRational norm = a_ * a_ - 2 * b_ * b_;
  if (norm == 0) throw std::domain_error("QSqrt2: division by zero");
  return {a_ / norm, -b_ / norm};
}

RealRoot2 QSqrt2::to_real_root2() const {
  const auto ea = two_adic_denominator(a_);
  const auto eb = two_adic_denominator(b_);
  if (!ea || !eb) throw std::domain_error("QSqrt2: denominator is not a power of two");
  const std::int64_t l = std::max(*ea, *eb);
  const BigRational scale = pow2(l);
  return RealRoot2(boost::multiprecision::numerator(BigRational(a_ * scale)), boost::multiprecision::numerator(BigRational(b_ * scale)), l);
}

std::string QSqrt2::to_string() const { return a_.str() + " + " + b_.str() + "*sqrt2"; }

QSqrt2 inv_sqrt2_pow(std::int64_t e) {
  // (1/sqrt2)^e = 2^{-e/2}; odd e leaves a factor 1/sqrt2 = sqrt2/2.
  const std::int64_t half = e >= 0 ? e / 2 : -((-e + 1) / 2);
  const std::int64_t odd = e - 2 * half;  // 0 or 1
  const BigRational base = pow2(-half);
  if (odd == 0) return {base, 0};
  return {0, base / 2};
}

std::vector<QSqrt2> weight_nodes(std::size_t n) {
  std::vector<QSqrt2> x;
  for (std::size_t i = 0; i <= n; ++i) x.push_back(inv_sqrt2_pow(static_cast<std::int64_t>(4 * i + 1)));
  return x;
}

QSqrt2 vandermonde_beta(std::size_t n) {
  QSqrt2 beta(1);
  for (std::size_t j = 1; j <= n; ++j) beta = beta * (QSqrt2(1) - inv_sqrt2_pow(static_cast<std::int64_t>(4 * j)));
  return beta;
}

std::vector<std::vector<QSqrt2>> vandermonde_inverse(const std::vector<QSqrt2>& nodes) {
  const std::size_t m = nodes.size();
  std::vector<std::vector<QSqrt2>> inv(m, std::vector<QSqrt2>(m));
  for (std::size_t j = 0; j < m; ++j) {
    // Coefficients of prod_{k != j} (z - x_k), lowest degree first.
    std::vector<QSqrt2> poly{QSqrt2(1)};
    QSqrt2 denom(1);
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j) continue;
      std::vector<QSqrt2> next(poly.size() + 1);
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] = next[d + 1] + poly[d];
        next[d] = next[d] - poly[d] * nodes[k];
      }
      poly = std::move(next);
      denom = denom * (nodes[j] - nodes[k]);
    }
    const QSqrt2 scale = denom.inverse();
    for (std::size_t t = 0; t < m; ++t) inv[t][j] = poly[t] * scale;
  }
  return inv;
}

std::vector<RealRoot2> vandermonde_inverse_row(std::size_t n, std::size_t t) {
  if (t > n) throw std::invalid_argument("vandermonde_inverse_row: t out of range");
  const auto inv = vandermonde_inverse(weight_nodes(n));
  const QSqrt2 beta = vandermonde_beta(n);
  std::vector<RealRoot2> row;
  for (std::size_t j = 0; j <= n; ++j) row.push_back((beta * inv[t][j]).to_real_root2());
  return row;
}

std::vector<BigInt> vandermonde_solve_integer(const std::vector<QSqrt2>& nodes, const std::vector<QSqrt2>& values) {
  if (nodes.size() != values.size()) throw std::invalid_argument("vandermonde_solve_integer: size mismatch");
  const auto inv = vandermonde_inverse(nodes);
  std::vector<BigInt> out;
  for (std::size_t t = 0; t < nodes.size(); ++t) {
    QSqrt2 c;
    for (std::size_t j = 0; j < nodes.size(); ++j) c = c + inv[t][j] * values[j];
    if (c.b() != 0 || boost::multiprecision::denominator(c.a()) != 1) {
      throw std::domain_error("vandermonde_solve_integer: solution is not integral");
    }
    out.push_back(boost::multiprecision::numerator(c.a()));
  }
  return out;
}

}  // namespace pconj
