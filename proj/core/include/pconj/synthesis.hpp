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

#include <utility>
#include <vector>

#include "pconj/circuit.hpp"
#include "pconj/tableau.hpp"

namespace pconj {

/// Deterministic O(n^2) circuit for a tableau: equal tableaux give identical
/// gate lists.
Circuit synthesize_tableau(const CliffordTableau& t);

/// Canonical form of a Clifford circuit; depends only on its tableau.
Circuit canonical_clifford(const Circuit& c);

/// C with C Z_j C^dagger = (-1)^{signs_j} P^{images_j} for j < r. The images
/// must be independent and pairwise commuting.
Circuit synthesize_from_images(std::size_t n, const std::vector<std::pair<SymplecticVec, bool>>& images);

/// F with F P^{x0} F^dagger = P^{x1} and F P^{y0} F^dagger = P^{y1}.
Circuit transport_pair(const SymplecticVec& x0, const SymplecticVec& y0, const SymplecticVec& x1,
                       const SymplecticVec& y1);

/// Clifford R with R p R^dagger = q, for nonzero Hermitian p, q. Only the
/// wires in the support of p or q are touched.
Circuit transport_pauli(const PhasedPauli& p, const PhasedPauli& q);

/// B = L A R with <A P^x A^dagger, P^y> = <B P^x' B^dagger, P^y'>. T-depth and
/// T-count of A are kept.
Circuit clifford_shift(const Circuit& a, const SymplecticVec& x, const SymplecticVec& y, const SymplecticVec& x_new,
                       const SymplecticVec& y_new);

}  // namespace pconj
