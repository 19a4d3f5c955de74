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

#include <cstddef>
#include <utility>
#include <vector>

#include "pconj/circuit.hpp"
#include "pconj/dense.hpp"

namespace pconj {

/// Identity-check circuit for the support question. Data wires come first,
/// then the 2n control ancillas, then the MCZ work ancillas.
struct SupportReduction {
  Circuit circuit;        // D^dagger M D
  Circuit conjugated;     // R C R^dagger, whose X^n coefficient is +-<C, P^z>
  Circuit entangled;      // D, on data plus control ancillas
  std::size_t data = 0;
  std::size_t ancillas = 0;
};

/// With every ancilla at |0>, the circuit acts as identity on the data (up to
/// global phase) iff P^z has coefficient 0 in the Pauli expansion of C.
/// T-depth is at most 2d + 6 ceil(log2((2n + 1) / 3)) + 3.
SupportReduction support_to_enic(const Circuit& c, const SymplecticVec& z);

/// T-depth bound quoted above.
std::size_t support_to_enic_depth_bound(std::size_t depth, std::size_t n);

/// The 2n queries (D, Z_j), (D, X_j). D is the identity up to phase iff all
/// of them commute.
std::vector<std::pair<Circuit, SymplecticVec>> enic_to_commute(const Circuit& d);

struct CommuteToEnic {
  Circuit u;  // C Z_1 C^dagger Z_1 after shifting x to Z_1
  Circuit v;  // C S_1 C^dagger S_1
};

CommuteToEnic commute_to_enic(const Circuit& c, const SymplecticVec& x);

/// COMMUTE answer from the two non-identity answers for u and v.
inline bool commute_from_enic(bool u_non_identity, bool v_non_identity) {
  return !u_non_identity && v_non_identity;
}

/// Canonical Clifford of F P^x F^dagger for F of T-depth at most 1.
Circuit teleport_correction(const Circuit& f, const SymplecticVec& x);

/// Checks F_corr F P^x |psi> = F |psi> up to phase, F_corr from
/// teleport_correction.
bool teleport_check(const Circuit& f, const SymplecticVec& x, const StateVector& psi);

/// Gates realizing P^x up to global phase.
Circuit pauli_circuit(const SymplecticVec& x);

}  // namespace pconj
