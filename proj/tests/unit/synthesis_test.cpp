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

#include "pconj/dense.hpp"
#include "pconj/synthesis.hpp"
#include "pconj/tableau.hpp"
#include "test_random.hpp"

namespace pconj {
namespace {

using testing::Rng;

DenseMatrix conj(const Circuit& c, const PhasedPauli& p) {
  auto u = unitary_of(c);
  return u * pauli_matrix(p) * u.adjoint();
}

TEST(Tableau, EmptyCircuitIsIdentity) {
  EXPECT_TRUE(tableau_from_circuit(Circuit(3)).is_identity());
  EXPECT_THROW(tableau_from_circuit(parse_circuit("qubits 1\nT 1\n")), std::invalid_argument);
}

TEST(Tableau, HadamardSwapsImages) {
  auto t = tableau_from_circuit(parse_circuit("qubits 2\nH 1\n"));
  EXPECT_EQ(t.z_image(0), PhasedPauli::parse("XI"));
  EXPECT_EQ(t.x_image(0), PhasedPauli::parse("ZI"));
  EXPECT_EQ(t.z_image(1), PhasedPauli::parse("IZ"));
}

TEST(Tableau, ConjugationMatchesOracle) {
  Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    auto c = testing::random_clifford(rng, n, 20);
    auto t = tableau_from_circuit(c);
    EXPECT_TRUE(t.is_symplectic());
    for (int k = 0; k < 5; ++k) {
      PhasedPauli p(testing::random_symplectic(rng, n), 2 * static_cast<int>(testing::pick(rng, 2)));
      EXPECT_EQ(pauli_matrix(conjugate_pauli(t, p)), conj(c, p));
    }
  }
}

TEST(Tableau, SignFlipByX) {
  auto t = tableau_from_circuit(parse_circuit("qubits 1\nX 1\n"));
  EXPECT_EQ(conjugate_pauli(t, PhasedPauli::parse("-Z")), PhasedPauli::parse("+Z"));
  EXPECT_THROW(conjugate_pauli(t, PhasedPauli::parse("iZ")), std::invalid_argument);
}

TEST(Tableau, CompositionIsHomomorphism) {
  Rng rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = testing::random_clifford(rng, 3, 15);
    auto b = testing::random_clifford(rng, 3, 15);
    Circuit ab = a;
    ab.append(b);  // b after a
    EXPECT_EQ(tableau_from_circuit(ab), compose(tableau_from_circuit(b), tableau_from_circuit(a)));
  }
}

TEST(Tableau, ConjugationPreservesCommutation) {
  Rng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = tableau_from_circuit(testing::random_clifford(rng, 4, 30));
    auto u = testing::random_symplectic(rng, 4);
    auto v = testing::random_symplectic(rng, 4);
    EXPECT_EQ(symplectic_form(t.apply(PhasedPauli(u)).v, t.apply(PhasedPauli(v)).v), symplectic_form(u, v));
  }
}

TEST(Canonical, EmptyCircuitHasFixedForm) {
  EXPECT_TRUE(canonical_clifford(Circuit(3)).empty());
}

TEST(Canonical, InsertedIdentityDoesNotChangeOutput) {
  Rng rng(54);
  auto c = testing::random_clifford(rng, 3, 20);
  Circuit padded = c;
  padded.add(Gate::h(0));
  padded.add(Gate::h(0));
  EXPECT_EQ(canonical_clifford(c), canonical_clifford(padded));
}

TEST(Canonical, SameTableauAndEquivalentRewrites) {
  Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto c = testing::random_clifford(rng, n, 25);
    auto canon = canonical_clifford(c);
    EXPECT_EQ(tableau_from_circuit(canon), tableau_from_circuit(c));
    EXPECT_LE(canon.size(), 12 * n * n + 12 * n);
  }
  for (int trial = 0; trial < 50; ++trial) {
    auto c = testing::random_clifford(rng, 3, 25);
    // S S S S = I, H S S H = X, and a trailing Z conjugated by X is -Z.
    Circuit r = c;
    for (int k = 0; k < 4; ++k) r.add(Gate::s(1));
    r.add(Gate::h(2));
    r.add(Gate::s(2));
    r.add(Gate::s(2));
    r.add(Gate::h(2));
    r.add(Gate::x(2));
    ASSERT_TRUE(equal_up_to_phase(unitary_of(c), unitary_of(r)));
    EXPECT_EQ(canonical_clifford(c), canonical_clifford(r));
    EXPECT_TRUE(equal_up_to_phase(unitary_of(canonical_clifford(c)), unitary_of(c)));
  }
}

TEST(SynthesizeFromImages, StandardImagesGiveIdentity) {
  std::vector<std::pair<SymplecticVec, bool>> images;
  for (std::size_t j = 0; j < 3; ++j) images.emplace_back(SymplecticVec::e_z(3, j), false);
  EXPECT_TRUE(tableau_from_circuit(synthesize_from_images(3, images)).is_identity());
}

TEST(SynthesizeFromImages, SingleXImage) {
  auto c = synthesize_from_images(1, {{SymplecticVec::e_x(1, 0), false}});
  EXPECT_EQ(conjugate_pauli(tableau_from_circuit(c), PhasedPauli::parse("Z")), PhasedPauli::parse("X"));
}

TEST(SynthesizeFromImages, RandomIsotropicImages) {
  Rng rng(56);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 4;
    const std::size_t r = 1 + trial % 4;
    auto vecs = testing::random_isotropic(rng, n, r);
    std::vector<std::pair<SymplecticVec, bool>> images;
    for (auto& v : vecs) images.emplace_back(v, testing::coin(rng));
    auto c = synthesize_from_images(n, images);
    auto t = tableau_from_circuit(c);
    for (std::size_t j = 0; j < r; ++j) {
      EXPECT_EQ(t.z_image(j), PhasedPauli::signed_pauli(images[j].first, images[j].second));
    }
  }
  EXPECT_THROW(synthesize_from_images(1, {{SymplecticVec::e_x(1, 0), false}, {SymplecticVec::e_z(1, 0), false}}),
               std::invalid_argument);
}

TEST(TransportPair, MapsPairsExactly) {
  auto f = transport_pair(SymplecticVec::e_z(1, 0), SymplecticVec::e_x(1, 0), SymplecticVec::e_x(1, 0),
                          SymplecticVec::e_z(1, 0));
  auto t = tableau_from_circuit(f);
  EXPECT_EQ(t.z_image(0), PhasedPauli::parse("X"));
  EXPECT_EQ(t.x_image(0), PhasedPauli::parse("Z"));
  Rng rng(57);
  for (int trial = 0; trial < 50; ++trial) {
    auto pick_pair = [&] {
      for (;;) {
        auto a = testing::random_symplectic(rng, 3);
        auto b = testing::random_symplectic(rng, 3);
        if (symplectic_form(a, b)) return std::pair{a, b};
      }
    };
    auto [x0, y0] = pick_pair();
    auto [x1, y1] = trial % 5 == 0 ? std::pair{x0, y0} : pick_pair();
    auto tf = tableau_from_circuit(transport_pair(x0, y0, x1, y1));
    EXPECT_EQ(conjugate_pauli(tf, PhasedPauli(x0)), PhasedPauli(x1));
    EXPECT_EQ(conjugate_pauli(tf, PhasedPauli(y0)), PhasedPauli(y1));
  }
  EXPECT_THROW(transport_pair(SymplecticVec::e_z(1, 0), SymplecticVec::e_z(1, 0), SymplecticVec::e_z(1, 0),
                              SymplecticVec::e_x(1, 0)),
               std::invalid_argument);
}

TEST(TransportPauli, TouchesOnlySupport) {
  auto r = transport_pauli(PhasedPauli::parse("IZIII"), PhasedPauli::parse("-IIIYX"));
  for (const auto& g : r.gates()) {
    EXPECT_NE(g.a, 0u);
    EXPECT_NE(g.a, 2u);
  }
  EXPECT_EQ(conjugate_pauli(tableau_from_circuit(r), PhasedPauli::parse("IZIII")), PhasedPauli::parse("-IIIYX"));
}

TEST(CliffordShift, PreservesCoefficientsAndTCounts) {
  Rng rng(58);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3;
    auto a = testing::random_t_circuit(rng, n, 1);
    auto x = testing::random_nonzero_symplectic(rng, n);
    auto y = testing::random_nonzero_symplectic(rng, n);
    auto x2 = testing::random_nonzero_symplectic(rng, n);
    auto y2 = testing::random_nonzero_symplectic(rng, n);
    auto b = clifford_shift(a, x, y, x2, y2);
    EXPECT_EQ(t_depth(b), t_depth(a));
    EXPECT_EQ(t_count(b), t_count(a));
    EXPECT_EQ(pauli_coefficient(conj(a, PhasedPauli(x)), y), pauli_coefficient(conj(b, PhasedPauli(x2)), y2));
  }
}

TEST(CliffordShift, ZToAllXOnIdentity) {
  const std::size_t n = 3;
  SymplecticVec all_x(F2Vec(n), F2Vec::ones(n));
  auto b = clifford_shift(Circuit(n), SymplecticVec::e_z(n, 0), SymplecticVec::e_z(n, 0), all_x, all_x);
  EXPECT_EQ(pauli_coefficient(conj(b, PhasedPauli(all_x)), all_x), ExactScalar(1));
  EXPECT_THROW(clifford_shift(Circuit(n), SymplecticVec(n), all_x, all_x, all_x), std::invalid_argument);
}

}  // namespace
}  // namespace pconj
