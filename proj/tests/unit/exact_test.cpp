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


#include <cmath>

#include <gtest/gtest.h>

#include "pconj/exact.hpp"
#include "test_random.hpp"

namespace pconj {
namespace {

using testing::Rng;

ExactScalar random_scalar(Rng& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(0, 4);
  return ExactScalar(coef(rng), coef(rng), coef(rng), coef(rng), den(rng));
}

TEST(ExactScalar, HalfFromInverseRoots) {
  auto r = ExactScalar::inv_sqrt2_power(1) * ExactScalar::inv_sqrt2_power(1);
  EXPECT_EQ(r, ExactScalar(1, 0, 0, 0, 2));
  EXPECT_EQ(r.to_string(), "(1,0,0,0)/sqrt2^2");
}

TEST(ExactScalar, OmegaToTheFourthIsMinusOne) {
  EXPECT_EQ(ExactScalar::omega_power(4), ExactScalar(-1));
  EXPECT_EQ(ExactScalar::omega_power(8), ExactScalar(1));
  EXPECT_EQ(ExactScalar::omega_power(-1), ExactScalar::omega_power(7));
}

TEST(ExactScalar, NormalizationIsMinimal) {
  // sqrt2 / sqrt2 = 1
  EXPECT_EQ(ExactScalar(0, 1, 0, -1, 1), ExactScalar(1));
  EXPECT_EQ(ExactScalar(2, 0, 0, 0, 2), ExactScalar(1));
  EXPECT_EQ(ExactScalar(0, 0, 0, 0, 5).denom_exp(), 0);
  EXPECT_EQ(ExactScalar(1, 1, 0, 0, 3).denom_exp(), 3);
  EXPECT_EQ(ExactScalar::sqrt2() * ExactScalar::sqrt2(), ExactScalar(2));
}

TEST(ExactScalar, RingAxioms) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_scalar(rng);
    auto b = random_scalar(rng);
    auto c = random_scalar(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(ExactScalar, LongProductsAgreeWithFloatingShadow) {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    ExactScalar acc(1);
    std::complex<double> shadow(1.0, 0.0);
    for (int i = 0; i < 100; ++i) {
      auto x = random_scalar(rng);
      if (x.is_zero()) continue;
      // keep magnitudes near one
      auto mag = std::abs(x.to_complex());
      const int shift = static_cast<int>(std::round(2 * std::log2(mag)));
      x = x.scaled(shift);
      acc *= x;
      shadow *= x.to_complex();
    }
    const auto got = acc.to_complex();
    EXPECT_LE(std::abs(got - shadow), 1e-9 * std::max(1.0, std::abs(shadow)));
  }
}

TEST(ExactScalar, ConjugateProductIsRealAndNonnegative) {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_scalar(rng);
    auto n = x.norm();
    EXPECT_TRUE(n.is_real());
    EXPECT_GE(n.to_complex().real(), -1e-12);
  }
}

TEST(ExactScalar, RealTestMatchesShadow) {
  EXPECT_TRUE(ExactScalar::sqrt2().is_real());
  EXPECT_FALSE(ExactScalar::omega_power(1).is_real());
  EXPECT_TRUE((ExactScalar::omega_power(1) + ExactScalar::omega_power(7)).is_real());
}

TEST(RealRoot2, TextForm) {
  EXPECT_EQ(RealRoot2(0).to_string(), "0");
  EXPECT_EQ(RealRoot2(-3).to_string(), "-3");
  EXPECT_EQ(RealRoot2::inv_sqrt2_power(1).to_string(), "sqrt2/2");
  EXPECT_EQ(RealRoot2(3, -2, 5).to_string(), "(3-2*sqrt2)/32");
  EXPECT_EQ(RealRoot2(0, -1, 0).to_string(), "-sqrt2");
}

TEST(RealRoot2, Arithmetic) {
  RealRoot2 a(1, 1, 0);  // 1 + sqrt2
  RealRoot2 b(-1, 1, 0);  // sqrt2 - 1
  EXPECT_EQ(a * b, RealRoot2(1));
  EXPECT_EQ(RealRoot2(2, 4, 1), RealRoot2(1, 2, 0));
  EXPECT_EQ(RealRoot2::inv_sqrt2_power(3) * RealRoot2::inv_sqrt2_power(1), RealRoot2(1, 0, 2));
  EXPECT_EQ(RealRoot2(3, -2, 0).sign(), 1);
  EXPECT_EQ(RealRoot2(1, -1, 0).sign(), -1);
  EXPECT_EQ(a.to_exact(), ExactScalar(1) + ExactScalar::sqrt2());
}

TEST(GBRoot2, Evaluation) {
  EXPECT_EQ(gb_value({F2Vec::from_string("001"), F2Vec::from_string("101")}), RealRoot2(-1));
  EXPECT_EQ(gb_value({F2Vec(3), F2Vec(3)}), RealRoot2(0));
  EXPECT_EQ(gb_value({F2Vec::from_string("000"), F2Vec::from_string("010")}), RealRoot2(0, 1, 0));
}

TEST(GBRoot2, ZeroHasEmptyMask) {
  auto e = gb_from_value(RealRoot2(0));
  EXPECT_TRUE(e.mask.is_zero());
  auto m = gb_from_value(RealRoot2(-1));
  EXPECT_EQ(gb_value(m), RealRoot2(-1));
}

TEST(GBRoot2, RoundTripsRandomValues) {
  Rng rng(24);
  std::uniform_int_distribution<std::int64_t> d(-(1 << 20), 1 << 20);
  for (int trial = 0; trial < 200; ++trial) {
    RealRoot2 r(d(rng), d(rng), 0);
    auto e = gb_from_value(r);
    EXPECT_EQ(gb_value(e), r);
    EXPECT_LE(e.length(), 2 * std::max(bit_length(r.a()), bit_length(r.b())) + 2);
  }
  EXPECT_THROW(gb_from_value(RealRoot2(1, 0, 1)), std::invalid_argument);
}

}  // namespace
}  // namespace pconj
