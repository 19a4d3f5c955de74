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

#include <string>
#include <string_view>

#include "pconj/f2.hpp"
#include "pconj/gate.hpp"

namespace pconj {

/// i^phase * P^v, where on each wire P^{(a,b)} = i^{ab} X^b Z^a.
struct PhasedPauli {
  SymplecticVec v;
  int phase = 0;  // exponent of i, kept in [0, 4)

  PhasedPauli() = default;
  explicit PhasedPauli(SymplecticVec vec, int phase_exp = 0) : v(std::move(vec)), phase(((phase_exp % 4) + 4) % 4) {}
  static PhasedPauli signed_pauli(SymplecticVec vec, bool negative) { return PhasedPauli(std::move(vec), negative ? 2 : 0); }
  static PhasedPauli identity(std::size_t n) { return PhasedPauli(SymplecticVec(n)); }

  std::size_t n() const noexcept { return v.n(); }
  bool hermitian() const noexcept { return phase % 2 == 0; }
  /// Sign bit of a Hermitian Pauli.
  bool negative() const noexcept { return phase == 2; }

  /// "-ZXY" style text; phases i and -i are written "i" and "-i".
  std::string to_string() const;
  /// Accepts an optional "+", "-", "i", "-i", "+i" prefix followed by one of
  /// I/X/Y/Z per wire, or the raw "a|b" bit form with an optional sign.
  static PhasedPauli parse(std::string_view text);

  friend bool operator==(const PhasedPauli&, const PhasedPauli&) = default;
};

/// Exact product: (i^k P^u)(i^l P^v).
PhasedPauli operator*(const PhasedPauli& p, const PhasedPauli& q);

/// Integer u_Z.v_X - v_Z.u_X.
long bracket(const SymplecticVec& u, const SymplecticVec& v);

/// Exponent g in [0, 4) with P^u P^v = i^g P^{u xor v}.
int product_phase(const SymplecticVec& u, const SymplecticVec& v);

/// Bit with prod_j P^{s_j x_j} = (-1)^theta P^v (product in basis order)
/// for v = xor_j s_j x_j. Throws if v is outside the span or the basis is not
/// isotropic.
bool theta(const OrderedBasis& x, const SymplecticVec& v);
/// Same with the coordinates already known.
bool theta_coords(const OrderedBasis& x, const F2Vec& coords);

/// g p g^dagger for a Clifford gate g. Throws on T or a wire out of range.
PhasedPauli update_by_gate(const PhasedPauli& p, const Gate& g);
/// In-place form of update_by_gate.
void conjugate_in_place(PhasedPauli& p, const Gate& g);

}  // namespace pconj
