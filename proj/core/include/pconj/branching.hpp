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

#include "pconj/coefficient.hpp"
#include "pconj/exact.hpp"
#include "pconj/f2.hpp"

namespace pconj {

/// One level of a branching: a basis of a subspace of F2^m and a linear map
/// F2^m -> F2^{|basis|} (row i gives component i) whose kernel holds the span.
struct BranchingLevel {
  std::vector<F2Vec> basis;
  F2Matrix map;
};

/// Levels 1..d; level 1 is applied first. Each level spreads y uniformly over
/// y + span{basis_i : map(y)_i = 1} with weight 2^{-|map(y)|/2}.
class Branching {
 public:
  Branching() = default;
  Branching(std::size_t ambient, std::vector<BranchingLevel> levels);

  std::size_t ambient() const noexcept { return m_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  /// 1-based.
  const BranchingLevel& level(std::size_t j) const { return levels_.at(j - 1); }

  /// y + span of the basis vectors selected by map(y).
  AffineSpace spread(std::size_t j, const F2Vec& y) const;
  /// |map_j(y)|.
  std::size_t spread_width(std::size_t j, const F2Vec& y) const;

 private:
  friend Branching branching_of(const Presentation& p);
  struct Unchecked {};
  Branching(std::size_t ambient, std::vector<BranchingLevel> levels, Unchecked)
      : m_(ambient), levels_(std::move(levels)) {}

  std::size_t m_ = 0;
  std::vector<BranchingLevel> levels_;
};

/// Coefficient of q in the formal sum generated from y, by direct recursion.
ExactScalar branching_coefficient(const Branching& a, const F2Vec& y, const F2Vec& q,
                                  const CoefficientOptions& opts = {});

/// Depth 2 in polynomial time: one affine intersection.
ExactScalar branching_coeff_d2(const Branching& a, const F2Vec& y, const F2Vec& q);

/// Depth 3: a sum over the first spread, each term an affine intersection.
/// Uses the closed form when the second and third spans meet only in 0 and
/// the first spread lies inside the last one.
ExactScalar branching_coeff_d3(const Branching& a, const F2Vec& y, const F2Vec& q,
                               const CoefficientOptions& opts = {});

/// True when the depth-3 closed form applies to (y, q).
bool d3_closed_form_applies(const Branching& a, const F2Vec& y, const F2Vec& q);

/// Branching with the layer bases and their anticommutation maps on F2^{2n}.
Branching branching_of(const Presentation& p);

/// As branching_of, after checking exhaustively that every chain sign is 0.
/// Throws invalid_argument otherwise.
Branching presentation_to_branching(const Presentation& p, const CoefficientOptions& opts = {});

}  // namespace pconj
