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
#include <vector>

#include "pconj/circuit.hpp"
#include "pconj/f2.hpp"
#include "pconj/pauli.hpp"
#include "pconj/tableau.hpp"

namespace pconj {

/// Isotropic basis with one sign bit per basis vector.
struct PresentationLayer {
  OrderedBasis basis;
  F2Vec signs;

  /// Sign of a combination, extended linearly from the basis signs.
  bool sign_of(const F2Vec& coords) const { return signs.dot(coords); }
  friend bool operator==(const PresentationLayer&, const PresentationLayer&) = default;
};

/// Layers x_1, ..., x_d (x_1 is innermost: closest to the conjugated Pauli)
/// and a signed outer Pauli (-1)^tau P^y.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::size_t n, std::vector<PresentationLayer> layers, SymplecticVec outer, bool tau);
  static Presentation pauli(const SymplecticVec& outer, bool tau) { return Presentation(outer.n(), {}, outer, tau); }

  std::size_t qubits() const noexcept { return n_; }
  std::size_t depth() const noexcept { return layers_.size(); }
  /// layers()[j - 1] is x_j.
  const std::vector<PresentationLayer>& layers() const noexcept { return layers_; }
  const PresentationLayer& layer(std::size_t j) const { return layers_.at(j - 1); }
  const SymplecticVec& outer() const noexcept { return outer_; }
  bool tau() const noexcept { return tau_; }

  /// Updates every (vector, sign) pair by conjugation with the tableau.
  Presentation conjugated(const CliffordTableau& t) const;
  /// The same layers with a different signed outer Pauli.
  Presentation with_outer(const SymplecticVec& outer, bool tau) const;
  /// Drops the innermost layer.
  Presentation without_first_layer() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<PresentationLayer> layers_;
  SymplecticVec outer_;
  bool tau_ = false;
};

/// Presentation of C P^x C^dagger. Its depth equals the T-depth of C.
Presentation encode(const Circuit& c, const SymplecticVec& x);

/// Circuit C with C P^z C^dagger equal to the presentation's unitary. z must
/// be zero exactly when the outer vector is zero. Empty layers are dropped.
Circuit decode(const Presentation& p, const SymplecticVec& z);

struct ProductFactor {
  std::size_t layer = 0;  // 1-based
  std::size_t index = 0;  // position in that layer's basis
  Presentation sub;       // factor is (I + i U^sub) / sqrt2
};

/// U = prod_factors (I + i U^sub)/sqrt2 * tail, factors listed left to right.
struct ProductForm {
  std::vector<ProductFactor> factors;
  PhasedPauli tail;
};

ProductForm product_form(const Presentation& p);

/// Text form: "presentation n=<n> d=<d>", per layer j = d..1 a line
/// "layer <j> dim=<r>" then r lines "<2n bits> <sign>", then
/// "outer <2n bits> <tau>".
std::string serialize(const Presentation& p);
Presentation parse_presentation(std::string_view text);

}  // namespace pconj
