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
#include <cstdint>
#include <vector>

#include "pconj/circuit.hpp"
#include "pconj/exact.hpp"
#include "pconj/pauli.hpp"

namespace pconj {

/// Exact dense 2^n x 2^n matrix. Wire 0 is the most significant bit of the
/// basis index.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t qubits);  // zero matrix
  static DenseMatrix identity(std::size_t qubits);

  std::size_t qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  const ExactScalar& at(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  ExactScalar& at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

  DenseMatrix adjoint() const;
  DenseMatrix& operator*=(const ExactScalar& s);
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  /// Left-multiplies by a gate.
  void apply_gate(const Gate& g);

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 1;
  std::vector<ExactScalar> data_;
};

/// Unitary G_m ... G_1 of the circuit.
DenseMatrix unitary_of(const Circuit& c);
DenseMatrix pauli_matrix(const PhasedPauli& p);

/// tr(A^dagger B) / 2^n.
ExactScalar hs_inner(const DenseMatrix& a, const DenseMatrix& b);

/// <U, P^c> for one Pauli.
ExactScalar pauli_coefficient(const DenseMatrix& u, const SymplecticVec& c);

/// All 4^n coefficients <U, P^c>, indexed by the integer whose bit k is bit
/// k of c's 2n-bit string.
std::vector<ExactScalar> pauli_expansion(const DenseMatrix& u);
SymplecticVec pauli_from_index(std::size_t n, std::size_t index);

bool equal_up_to_phase(const DenseMatrix& a, const DenseMatrix& b);
bool is_scalar_identity(const DenseMatrix& u);

/// Exact state vector for circuits too wide for a dense unitary.
class StateVector {
 public:
  StateVector(std::size_t qubits, std::uint64_t basis_index);
  /// Takes the amplitudes as given; the size must be a power of two.
  explicit StateVector(std::vector<ExactScalar> amplitudes);

  std::size_t qubits() const noexcept { return n_; }
  const std::vector<ExactScalar>& amplitudes() const noexcept { return amp_; }
  const ExactScalar& amplitude(std::uint64_t index) const { return amp_[index]; }

  void apply_gate(const Gate& g);
  void apply(const Circuit& c);

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::size_t n_;
  std::vector<ExactScalar> amp_;
};

bool equal_up_to_phase(const StateVector& a, const StateVector& b);

}  // namespace pconj
