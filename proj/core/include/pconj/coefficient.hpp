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

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pconj/exact.hpp"
#include "pconj/presentation.hpp"

namespace pconj {

/// Raised when chain enumeration would visit more nodes than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoefficientOptions {
  std::uint64_t node_budget = std::uint64_t{1} << 22;
};

/// Sign bit contributed by stepping from y by the layer combination `coords`.
/// coords must select only basis vectors anticommuting with y.
bool step_sign(const PresentationLayer& layer, const SymplecticVec& y, const F2Vec& coords);

/// Total sign of a chain y_1..y_d (y_0 is the outer vector). Throws
/// invalid_argument if the chain is not admissible.
bool chain_sign(const Presentation& p, const std::vector<SymplecticVec>& chain);

/// One admissible chain with its sign and its power of 1/sqrt2.
struct Chain {
  std::vector<SymplecticVec> steps;  // y_1..y_d
  bool sign = false;
  std::uint64_t exponent = 0;
};

/// Visits every admissible chain. Throws BudgetExceeded past the budget.
void for_each_chain(const Presentation& p, const std::function<void(const Chain&)>& fn,
                    const CoefficientOptions& opts = {});

/// Exact <U, P^z> as a sum over chains ending at z.
ExactScalar coefficient(const Presentation& p, const SymplecticVec& z, const CoefficientOptions& opts = {});

/// Depth <= 1 only: one affine membership test and one sign.
ExactScalar coefficient_depth1_fast(const Presentation& p, const SymplecticVec& z);

/// Nonzero coefficients, sorted by Pauli.
std::vector<std::pair<SymplecticVec, ExactScalar>> expansion(const Presentation& p,
                                                             const CoefficientOptions& opts = {});

/// True when every admissible chain has sign 0.
bool sign_is_zero(const Presentation& p, const CoefficientOptions& opts = {});
/// Same, restricted to chains ending at z.
bool sign_is_zero_towards(const Presentation& p, const SymplecticVec& z, const CoefficientOptions& opts = {});

/// Expands the innermost layer: the term of U for the combination `coords`
/// of basis vectors anticommuting with the outer vector, as a presentation
/// one layer shallower. U = 2^{-k/2} sum over such coords of U^{peel}.
Presentation peel(const Presentation& p, const F2Vec& coords);

}  // namespace pconj
