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

#include <vector>

#include "pconj/circuit.hpp"
#include "pconj/pauli.hpp"

namespace pconj {

/// Images C Z_j C^dagger and C X_j C^dagger of the generators, with signs.
/// Identifies a Clifford up to global phase.
class CliffordTableau {
 public:
  CliffordTableau() = default;
  /// Identity tableau.
  explicit CliffordTableau(std::size_t n);
  CliffordTableau(std::vector<PhasedPauli> z_images, std::vector<PhasedPauli> x_images);

  std::size_t qubits() const noexcept { return z_.size(); }
  const PhasedPauli& z_image(std::size_t j) const { return z_[j]; }
  const PhasedPauli& x_image(std::size_t j) const { return x_[j]; }

  /// C p C^dagger for any phased Pauli.
  PhasedPauli apply(const PhasedPauli& p) const;
  /// Replaces C with g C.
  void append_gate(const Gate& g);
  bool is_identity() const;
  /// Checks that the images satisfy the canonical commutation relations.
  bool is_symplectic() const;

  friend bool operator==(const CliffordTableau&, const CliffordTableau&) = default;

 private:
  std::vector<PhasedPauli> z_;
  std::vector<PhasedPauli> x_;
};

/// Throws if the circuit contains a T gate.
CliffordTableau tableau_from_circuit(const Circuit& c);

/// outer o inner: the tableau of the unitary outer * inner.
CliffordTableau compose(const CliffordTableau& outer, const CliffordTableau& inner);

/// C p C^dagger for Hermitian p; throws otherwise.
PhasedPauli conjugate_pauli(const CliffordTableau& c, const PhasedPauli& p);

}  // namespace pconj
