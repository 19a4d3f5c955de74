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


#include <gtest/gtest.h>

#include "pconj/branching.hpp"
#include "presentation_oracle.hpp"

namespace pconj {
namespace {

using testing::Rng;

// Random level on F2^m: independent basis of dimension <= max_dim and a map
// whose rows are orthogonal to it.
BranchingLevel random_level(Rng& rng, std::size_t m, std::size_t max_dim) {
  BranchingLevel l;
  const std::size_t target = testing::pick(rng, max_dim + 1);
  while (l.basis.size() < target) {
    auto v = testing::random_bits(rng, m);
    std::vector<F2Vec> trial = l.basis;
    trial.push_back(v);
    if (rank_of(trial, m) == trial.size()) l.basis = std::move(trial);
  }
  l.map = F2Matrix(0, m);
  std::vector<F2Vec> perp;
  if (l.basis.empty()) {
    for (std::size_t i = 0; i < m; ++i) perp.push_back(F2Vec::unit(m, i));
  } else {
    perp = gauss_eliminate(F2Matrix(l.basis, m)).kernel_basis;
  }
  for (std::size_t i = 0; i < l.basis.size(); ++i) {
    F2Vec row(m);
    for (const auto& p : perp) {
      if (testing::coin(rng)) row ^= p;
    }
    l.map.push_back(row);
  }
  return l;
}

Branching random_branching(Rng& rng, std::size_t m, std::size_t d) {
  std::vector<BranchingLevel> levels;
  for (std::size_t j = 0; j < d; ++j) levels.push_back(random_level(rng, m, 3));
  return Branching(m, std::move(levels));
}

TEST(Branching, RejectsBasisOutsideKernel) {
  BranchingLevel l{{F2Vec::from_string("10")}, F2Matrix::from_strings({"10"})};
  EXPECT_THROW(Branching(2, {l}), std::invalid_argument);
}

TEST(Branching, EmptyBasesGiveIndicator) {
  const Branching a(3, {BranchingLevel{{}, F2Matrix(0, 3)}, BranchingLevel{{}, F2Matrix(0, 3)}});
  const auto y = F2Vec::from_string("101");
  EXPECT_TRUE(branching_coeff_d2(a, y, y).is_one());
  EXPECT_TRUE(branching_coeff_d2(a, y, F2Vec::from_string("100")).is_zero());
  const Branching b(3, {BranchingLevel{{}, F2Matrix(0, 3)}, BranchingLevel{{}, F2Matrix(0, 3)},
                        BranchingLevel{{}, F2Matrix(0, 3)}});
  EXPECT_TRUE(branching_coeff_d3(b, y, y).is_one());
}

TEST(Branching, ZeroMapsAndEqualSpansGiveOne) {
  const F2Vec b = F2Vec::from_string("0110");
  const BranchingLevel l{{b}, F2Matrix::from_strings({"0000"})};
  const Branching a(4, {l, l});
  const auto y = F2Vec::from_string("1000");
  EXPECT_TRUE(branching_coeff_d2(a, y, y).is_one());
}

TEST(Branching, DepthTwoMatchesBruteForce) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_branching(rng, 8, 2);
    const auto y = testing::random_bits(rng, 8);
    // Pick q reachable from y about half the time.
    F2Vec q = testing::random_bits(rng, 8);
    if (testing::coin(rng)) {
      const auto s1 = a.spread(1, y).points();
      const auto mid = s1[testing::pick(rng, s1.size())];
      const auto s2 = a.spread(2, mid).points();
      q = s2[testing::pick(rng, s2.size())];
    }
    EXPECT_EQ(branching_coeff_d2(a, y, q), branching_coefficient(a, y, q));
  }
}

TEST(Branching, DepthThreeMatchesBruteForce) {
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_branching(rng, 8, 3);
    const auto y = testing::random_bits(rng, 8);
    F2Vec q = y;
    for (std::size_t j = 1; j <= 3; ++j) {
      const auto pts = a.spread(j, q).points();
      q = pts[testing::pick(rng, pts.size())];
    }
    if (trial % 4 == 0) q = testing::random_bits(rng, 8);
    EXPECT_EQ(branching_coeff_d3(a, y, q), branching_coefficient(a, y, q));
  }
}

TEST(Branching, ClosedFormAgreesWhenItApplies) {
  // Second level spans the low half, third the high half; the first spread is
  // a point inside the third spread.
  const std::size_t m = 4;
  const BranchingLevel first{{}, F2Matrix(0, m)};
  const BranchingLevel second{{F2Vec::from_string("1000"), F2Vec::from_string("0100")},
                              F2Matrix::from_strings({"0010", "0011"})};
  const BranchingLevel third{{F2Vec::from_string("0010"), F2Vec::from_string("0001")},
                             F2Matrix::from_strings({"1000", "0100"})};
  const Branching a(m, {first, second, third});
  const auto y = F2Vec::from_string("1110");
  const auto q = F2Vec::from_string("1100");
  ASSERT_TRUE(d3_closed_form_applies(a, y, q));
  EXPECT_EQ(branching_coeff_d3(a, y, q), branching_coefficient(a, y, q));
}

TEST(Branching, PresentationBranchingCountsChainMagnitudes) {
  Rng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = testing::random_presentation(rng, 2, 1 + testing::pick(rng, 3));
    const auto a = branching_of(p);
    std::map<SymplecticVec, ExactScalar> magnitude;
    for_each_chain(p, [&](const Chain& c) {
      auto& slot = magnitude[c.steps.back()];
      slot = slot + ExactScalar::inv_sqrt2_power(static_cast<std::int64_t>(c.exponent));
    });
    for (std::size_t k = 0; k < 16; ++k) {
      const auto z = pauli_from_index(2, k);
      const auto it = magnitude.find(z);
      const ExactScalar want = it == magnitude.end() ? ExactScalar() : it->second;
      EXPECT_EQ(branching_coefficient(a, p.outer().bits(), z.bits()), want);
    }
  }
}

TEST(Branching, SignCheckGuardsConversion) {
  const auto x = PhasedPauli::parse("X").v;
  auto layer = [](bool sign) {
    F2Vec s(1);
    s.set(0, sign);
    return PresentationLayer{OrderedBasis(1, {PhasedPauli::parse("Z").v}), s};
  };
  EXPECT_THROW(presentation_to_branching(Presentation(1, {layer(false)}, x, false)), std::invalid_argument);
  const Presentation ok(1, {layer(true)}, x, false);
  const auto a = presentation_to_branching(ok);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto z = pauli_from_index(1, k);
    EXPECT_EQ(branching_coefficient(a, x.bits(), z.bits()), coefficient(ok, z));
  }
}

}  // namespace
}  // namespace pconj
