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

namespace pconj {

// Every gadget below is judged by its Z_1 coefficient <U Z_1 U^dagger, Z_1>.
// Inputs are judged at P^x; "alpha" below is <C P^x C^dagger, P^x>.

/// A on wires 0.. and B on wires b_offset.. of a `width`-wire register, with
/// their T layers aligned so the T-depth is the larger of the two.
Circuit tensor_aligned(const Circuit& a, const Circuit& b, std::size_t width, std::size_t b_offset);

/// clifford_shift of C moving (x, x) to (Z_1, Z_1).
Circuit shift_to_z1(const Circuit& c, const SymplecticVec& x);

/// Clifford on n wires whose coefficient at P^x is 0.
Circuit zero_coefficient_clifford(std::size_t n, const SymplecticVec& x);

/// C (x) D on 2n wires, coefficient alpha * beta. Keeps the T-depth.
Circuit product_gadget(const Circuit& c, const Circuit& d, const SymplecticVec& x);

/// 2n+1 wires, coefficient (alpha + beta) / 2, T-depth at most d + 2.
Circuit average_gadget(const Circuit& c, const Circuit& d, const SymplecticVec& x);

/// Coefficient 2^{-ceil(log2 k)} * sum of the inputs' coefficients. The list
/// is padded with zero-coefficient Cliffords up to a power of two.
Circuit linear_combination_gadget(const std::vector<Circuit>& circuits, const SymplecticVec& x);

/// n wires, coefficient (-1)^negative * 2^{-k/2}: a T layer on k wires seen
/// from X^k. k = 0 gives the Pauli circuit with coefficient +-1.
Circuit power_circuit(std::size_t n, std::size_t k, bool negative);

struct GBCircuit {
  Circuit circuit;
  std::int64_t ell = 0;  // coefficient is gb_value(e) / 2^ell
};

/// Circuit whose coefficient is gb_value(e) / 2^ell. Uses O(m^2) wires for a
/// digit string of length m.
GBCircuit gb_circuit(const GBRoot2Expr& e);

/// Number of ancilla wires used by mcz_log_depth(m).
std::size_t mcz_ancillas(std::size_t m);

/// Exact Z on |1...1> of wires 0..m, built from a tree of Toffolis into
/// ancillas (wires m+1...) that are returned to |0>. T-depth is at most
/// 6 * ceil(log2((m + 1) / 3)) + 3 (0 for m = 1).
Circuit mcz_log_depth(std::size_t m);

/// Appends CCZ on wires a, b, c: 7 T gates, T-depth 3, no ancilla.
void append_ccz(Circuit& c, std::size_t a, std::size_t b, std::size_t t);

}  // namespace pconj
