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
#include <string_view>

#include "pconj/circuit.hpp"
#include "pconj/coefficient.hpp"
#include "pconj/exact.hpp"
#include "pconj/pauli.hpp"

namespace pconj {

enum class DecisionMethod { CliffordExact, Depth1Encoding, Depth2Peel, Enumerative, Oracle };

std::string_view method_tag(DecisionMethod m);

struct DecisionResources {
  std::size_t qubits = 0;
  std::size_t t_depth = 0;
  std::size_t coefficient_queries = 0;
  std::size_t tableau_comparisons = 0;
  std::size_t dense_qubits = 0;  // nonzero only on the oracle path
};

/// `answer` is the yes/no answer; `value` carries the self-coefficient when
/// one was computed (always for conjugate_value).
struct DecisionResult {
  bool answer = false;
  ExactScalar value;
  DecisionMethod method = DecisionMethod::CliffordExact;
  DecisionResources resources;
};

struct DecisionOptions {
  CoefficientOptions budget;
  /// T-depth > 2 instances on at most this many qubits go to the dense
  /// oracle instead of chain enumeration. 0 disables it.
  std::size_t oracle_qubits = 0;
};

/// ENIC: yes iff C is not the identity up to global phase.
DecisionResult decide_enic(const Circuit& c, const DecisionOptions& opts = {});

/// Yes iff C P^x C^dagger = P^x exactly. x must be nonzero.
DecisionResult decide_commute(const Circuit& c, const SymplecticVec& x, const DecisionOptions& opts = {});

/// Yes iff <C P^x C^dagger, P^x> != 0. x must be nonzero.
DecisionResult decide_support(const Circuit& c, const SymplecticVec& x, const DecisionOptions& opts = {});

/// Exact <C P^x C^dagger, P^x>; answer is value != 0.
DecisionResult conjugate_value(const Circuit& c, const SymplecticVec& x, const DecisionOptions& opts = {});

}  // namespace pconj
