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


#include "pconj/decision.hpp"

#include <stdexcept>

#include "pconj/dense.hpp"
#include "pconj/presentation.hpp"
#include "pconj/support_reduction.hpp"
#include "pconj/tableau.hpp"

namespace pconj {

namespace {

void require_nonzero(const SymplecticVec& x, const Circuit& c) {
  if (x.is_zero()) throw std::invalid_argument("decision: the Pauli must be nonzero");
  if (x.n() != c.qubits()) throw std::invalid_argument("decision: Pauli and circuit widths differ");
}

DecisionResult start(const Circuit& c) {
  DecisionResult r;
  r.resources.qubits = c.qubits();
  r.resources.t_depth = t_depth(c);
  return r;
}

bool use_oracle(const DecisionResult& r, const DecisionOptions& opts) {
  return r.resources.t_depth > 2 && r.resources.qubits <= opts.oracle_qubits;
}

// C = D2 D1 with both halves of T-depth 1.
std::pair<Circuit, Circuit> split_depth2(const Circuit& c) {
  const auto parts = layer_decompose(c);
  const Circuit d1 = recompose({{parts.cliffords[0], parts.cliffords[1]}, {parts.layers[0]}});
  const Circuit d2 = recompose({{Circuit(c.qubits()), parts.cliffords[2]}, {parts.layers[1]}});
  return {d1, d2};
}

// D1 P D1^dagger = D2^dagger P D2, both sides Clifford up to phase. Equal
// tableaux leave a phase, fixed by one coefficient: the outer vector of a
// depth-1 presentation always has a nonzero one.
bool commute_by_peel(const Circuit& c, const SymplecticVec& x, DecisionResources& res) {
  const auto [d1, d2] = split_depth2(c);
  const Circuit d2_inv = dagger(d2);
  ++res.tableau_comparisons;
  if (tableau_from_circuit(teleport_correction(d1, x)) != tableau_from_circuit(teleport_correction(d2_inv, x))) {
    return false;
  }
  res.coefficient_queries += 2;
  const Presentation left = encode(d1, x);
  const SymplecticVec& z = left.outer();
  const ExactScalar a = coefficient_depth1_fast(left, z);
  if (a.is_zero()) throw std::logic_error("decide_commute: outer coefficient vanished");
  return a == coefficient_depth1_fast(encode(d2_inv, x), z);
}

}  // namespace

std::string_view method_tag(DecisionMethod m) {
  switch (m) {
    case DecisionMethod::CliffordExact:
      return "clifford-exact";
    case DecisionMethod::Depth1Encoding:
      return "depth1-encoding";
    case DecisionMethod::Depth2Peel:
      return "depth2-peel";
    case DecisionMethod::Enumerative:
      return "enumerative";
    case DecisionMethod::Oracle:
      return "oracle";
  }
  return "unknown";
}

DecisionResult conjugate_value(const Circuit& c, const SymplecticVec& x, const DecisionOptions& opts) {
  require_nonzero(x, c);
  DecisionResult r = start(c);
  if (r.resources.t_depth == 0) {
    r.method = DecisionMethod::CliffordExact;
    const PhasedPauli img = tableau_from_circuit(c).apply(PhasedPauli(x));
    r.value = img.v == x ? ExactScalar(img.negative() ? -1 : 1) : ExactScalar(0);
  } else if (r.resources.t_depth == 1) {
    r.method = DecisionMethod::Depth1Encoding;
    ++r.resources.coefficient_queries;
    r.value = coefficient_depth1_fast(encode(c, x), x);
  } else if (use_oracle(r, opts)) {
    r.method = DecisionMethod::Oracle;
    r.resources.dense_qubits = c.qubits();
    const DenseMatrix u = unitary_of(c);
    r.value = pauli_coefficient(u * pauli_matrix(PhasedPauli(x)) * u.adjoint(), x);
  } else {
    r.method = DecisionMethod::Enumerative;
    ++r.resources.coefficient_queries;
    r.value = coefficient(encode(c, x), x, opts.budget);
  }
  r.answer = !r.value.is_zero();
  return r;
}

DecisionResult decide_support(const Circuit& c, const SymplecticVec& x, const DecisionOptions& opts) {
  return conjugate_value(c, x, opts);
}

DecisionResult decide_commute(const Circuit& c, const SymplecticVec& x, const DecisionOptions& opts) {
  require_nonzero(x, c);
  if (t_depth(c) != 2) {
    // Self-coefficient 1 forces every other coefficient to vanish.
    DecisionResult r = conjugate_value(c, x, opts);
    r.answer = r.value.is_one();
    return r;
  }
  DecisionResult r = start(c);
  r.method = DecisionMethod::Depth2Peel;
  r.answer = commute_by_peel(c, x, r.resources);
  return r;
}

DecisionResult decide_enic(const Circuit& c, const DecisionOptions& opts) {
  DecisionResult r = start(c);
  if (r.resources.t_depth == 0) {
    r.method = DecisionMethod::CliffordExact;
    ++r.resources.tableau_comparisons;
    r.answer = !tableau_from_circuit(c).is_identity();
    return r;
  }
  if (use_oracle(r, opts)) {
    r.method = DecisionMethod::Oracle;
    r.resources.dense_qubits = c.qubits();
    r.answer = !is_scalar_identity(unitary_of(c));
    return r;
  }
  r.method = r.resources.t_depth == 1   ? DecisionMethod::Depth1Encoding
             : r.resources.t_depth == 2 ? DecisionMethod::Depth2Peel
                                        : DecisionMethod::Enumerative;
  for (const auto& [d, p] : enic_to_commute(c)) {
    const DecisionResult q = decide_commute(d, p, opts);
    r.resources.coefficient_queries += q.resources.coefficient_queries;
    r.resources.tableau_comparisons += q.resources.tableau_comparisons;
    if (!q.answer) {
      r.answer = true;
      return r;
    }
  }
  r.answer = false;
  return r;
}

}  // namespace pconj
