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

#include "pconj/decision.hpp"
#include "pconj/support_reduction.hpp"
#include "presentation_oracle.hpp"

namespace pconj {
namespace {

using testing::dense_conjugate;
using testing::Rng;

bool oracle_enic(const Circuit& c) { return !is_scalar_identity(unitary_of(c)); }

bool oracle_commute(const Circuit& c, const SymplecticVec& x) {
  return dense_conjugate(c, x) == pauli_matrix(PhasedPauli(x));
}

ExactScalar oracle_value(const Circuit& c, const SymplecticVec& x) {
  return pauli_coefficient(dense_conjugate(c, x), x);
}

Circuit one_wire(std::initializer_list<Gate> gates) {
  Circuit c(1);
  for (const auto& g : gates) c.add(g);
  return c;
}

const SymplecticVec kZ = SymplecticVec::e_z(1, 0);
const SymplecticVec kX = SymplecticVec::e_x(1, 0);

TEST(Decision, SmallExamples) {
  EXPECT_FALSE(decide_enic(Circuit(1)).answer);
  EXPECT_EQ(decide_enic(Circuit(1)).method, DecisionMethod::CliffordExact);
  EXPECT_TRUE(decide_enic(one_wire({Gate::s(0)})).answer);
  EXPECT_TRUE(decide_commute(one_wire({Gate::z(0)}), kZ).answer);
  EXPECT_FALSE(decide_commute(one_wire({Gate::x(0)}), kZ).answer);
  const auto id = decide_support(Circuit(1), kZ);
  EXPECT_TRUE(id.answer);
  EXPECT_TRUE(id.value.is_one());
  EXPECT_FALSE(decide_support(one_wire({Gate::h(0)}), kZ).answer);
  const auto t = conjugate_value(one_wire({Gate::t(0)}), kX);
  EXPECT_EQ(t.value, ExactScalar::inv_sqrt2_power(1));
  EXPECT_EQ(t.method, DecisionMethod::Depth1Encoding);
  EXPECT_THROW(decide_commute(Circuit(1), SymplecticVec(1)), std::invalid_argument);
  EXPECT_EQ(method_tag(DecisionMethod::Depth2Peel), "depth2-peel");
}

void check_all(const Circuit& c) {
  const std::size_t depth = t_depth(c);
  const auto enic = decide_enic(c);
  ASSERT_EQ(enic.answer, oracle_enic(c)) << serialize(c);
  if (depth == 2) EXPECT_EQ(enic.method, DecisionMethod::Depth2Peel);
  for (std::size_t i = 1; i < (std::size_t{1} << (2 * c.qubits())); ++i) {
    const SymplecticVec x = pauli_from_index(c.qubits(), i);
    const auto com = decide_commute(c, x);
    ASSERT_EQ(com.answer, oracle_commute(c, x)) << serialize(c) << x.to_string();
    if (depth == 2) EXPECT_EQ(com.method, DecisionMethod::Depth2Peel);
    const ExactScalar want = oracle_value(c, x);
    const auto val = conjugate_value(c, x);
    ASSERT_EQ(val.value, want) << serialize(c);
    EXPECT_EQ(decide_support(c, x).answer, !want.is_zero());
  }
}

TEST(Decision, ExhaustiveOneWire) {
  const std::vector<Gate> alphabet{Gate::h(0), Gate::s(0), Gate::t(0), Gate::x(0), Gate::z(0)};
  std::size_t seen = 0;
  std::vector<std::size_t> digits;
  for (std::size_t len = 0; len <= 6; ++len) {
    digits.assign(len, 0);
    for (;;) {
      Circuit c(1);
      for (auto d : digits) c.add(alphabet[d]);
      check_all(c);
      ++seen;
      std::size_t pos = 0;
      while (pos < len && ++digits[pos] == alphabet.size()) digits[pos++] = 0;
      if (pos == len) break;
    }
  }
  EXPECT_EQ(seen, 19531U);
}

TEST(Decision, RandomSmallCircuits) {
  Rng rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 2;
    check_all(testing::random_t_circuit(rng, n, trial % 4, n + 2));
  }
}

TEST(Decision, DepthTwoIdentitiesAreFound) {
  // T T^dagger style products that collapse to the identity or a Pauli.
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const Circuit half = testing::random_t_circuit(rng, n, 1, n + 2);
    Circuit c = half;
    c.append(dagger(half));
    ASSERT_LE(t_depth(c), 2U);
    EXPECT_EQ(decide_enic(c).answer, oracle_enic(c));
    EXPECT_FALSE(decide_enic(c).answer);
    for (std::size_t j = 0; j < n; ++j) {
      const auto x = SymplecticVec::e_z(n, j);
      EXPECT_TRUE(decide_commute(c, x).answer);
    }
  }
}

TEST(Decision, CrossDeciderConsistency) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const Circuit c = testing::random_t_circuit(rng, n, 1, n + 2);
    const SymplecticVec x = testing::random_nonzero_symplectic(rng, n);
    // C P C^dagger P is a phase iff C P C^dagger = +-P.
    Circuit loop = testing::random_clifford(rng, n, 0);
    loop.append(pauli_circuit(x)).append(dagger(c)).append(pauli_circuit(x)).append(c);
    const ExactScalar v = conjugate_value(c, x).value;
    EXPECT_EQ(decide_enic(loop).answer, !(v.is_one() || (-v).is_one()));
    const auto pair = commute_to_enic(c, x);
    EXPECT_EQ(commute_from_enic(decide_enic(pair.u).answer, decide_enic(pair.v).answer),
              decide_commute(c, x).answer);
  }
}

TEST(Decision, BudgetAndOracleFallback) {
  Rng rng(8);
  const Circuit c = testing::random_t_circuit(rng, 3, 4);
  const SymplecticVec x = SymplecticVec::e_x(3, 0);
  DecisionOptions tight;
  tight.budget.node_budget = 1;
  EXPECT_THROW(conjugate_value(c, x, tight), BudgetExceeded);
  tight.oracle_qubits = 3;
  const auto r = conjugate_value(c, x, tight);
  EXPECT_EQ(r.method, DecisionMethod::Oracle);
  EXPECT_EQ(r.value, oracle_value(c, x));
  EXPECT_EQ(decide_enic(c, tight).answer, oracle_enic(c));
}

}  // namespace
}  // namespace pconj
