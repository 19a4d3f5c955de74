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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pconj/circuit.hpp"
#include "pconj/coding.hpp"
#include "pconj/exact.hpp"
#include "pconj/presentation.hpp"

namespace pconj {

/// Depth-3 presentation of a 1-remainder code V of length n. Layers, applied
/// first to last: the code's rows as a Z subspace with sign 1, then E_X and E_Z
/// with sign 0, and outer X^n. Chains ending at X^n all carry sign 0 and the
/// coefficient there is wt_V(1/sqrt2) / (2^{n/2} sqrt|V|). Other chains do not.
Presentation code_to_presentation(const OneRemainderMatrix& g);

/// The coefficient above, from the weight distribution.
RealRoot2 code_coefficient(const OneRemainderMatrix& g);

/// Same value from the presentation through the depth-3 branching formula.
/// Only 2^k terms are summed.
ExactScalar code_coefficient_by_branching(const OneRemainderMatrix& g);

/// T-depth-3 circuit on n wires whose Z_1 coefficient is code_coefficient(g).
Circuit code_circuit(const OneRemainderMatrix& g);

/// Closed set of relations a certificate claim may state.
enum class Relation {
  CodeEmbedding,    // Z_1 coefficient of a code circuit
  ScaledDigits,     // gb_circuit of a scaled inverse-Vandermonde entry
  Product,          // product gadget of two earlier claims
  PowerOfTwo,       // power circuit
  Combination,      // final linear combination
  ZeroIffNoWeight,  // top-level relation of a binary-weight reduction
};

std::string_view relation_tag(Relation r);
Relation parse_relation(std::string_view tag);

struct CoefficientClaim {
  Relation relation = Relation::CodeEmbedding;
  std::string label;
  RealRoot2 value;  // claimed Z_1 coefficient
  std::size_t qubits = 0;
  std::size_t t_depth = 0;

  friend bool operator==(const CoefficientClaim&, const CoefficientClaim&) = default;
};

struct ReductionCertificate {
  std::string source;
  Relation relation = Relation::ZeroIffNoWeight;
  RealRoot2 predicted;  // Z_1 coefficient of the emitted circuit
  std::vector<CoefficientClaim> claims;
  std::vector<std::string> notes;

  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

std::string serialize(const ReductionCertificate& c);
ReductionCertificate parse_certificate(std::string_view text);

struct BinaryWeightReduction {
  Circuit circuit;
  ReductionCertificate certificate;
  std::vector<Circuit> parts;  // parts[i] realizes certificate.claims[i]
};

/// Circuit F whose Z_1 coefficient is 0 iff V has no codeword of weight t.
/// The coefficient equals 2^{-c} 2^{-E/2} beta b_t, with b_t the number of
/// weight-t codewords; c and E are recorded in the certificate notes.
BinaryWeightReduction binary_weight_to_circuit(const OneRemainderMatrix& g, std::size_t t);

/// Evaluates wt_X(1/sqrt2) for a 1-remainder code X.
using WeightEvaluator = std::function<RealRoot2(const OneRemainderMatrix&)>;

/// Evaluator reading the weight distribution directly.
RealRoot2 evaluate_by_distribution(const OneRemainderMatrix& g);
/// Evaluator going through code_to_presentation and the branching formula.
RealRoot2 evaluate_by_presentation(const OneRemainderMatrix& g);

/// Weight distribution of the code generated by p (rows may be dependent),
/// using only evaluations of 1-remainder codes [I_k ... | P ...].
std::vector<std::uint64_t> recover_distribution_1mod4(const F2Matrix& p, const WeightEvaluator& evaluator);

}  // namespace pconj
