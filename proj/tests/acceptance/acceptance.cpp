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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>

#include "gadget_oracle.hpp"
#include "pconj/code_reduction.hpp"
#include "pconj/decision.hpp"
#include "pconj/gadgets.hpp"
#include "pconj/support_reduction.hpp"
#include "pconj/synthesis.hpp"
#include "pconj/vandermonde.hpp"
#include "presentation_oracle.hpp"

namespace pconj {
namespace {

using testing::dense_coefficient;
using testing::dense_conjugate;
using testing::pick;
using testing::random_nonzero_symplectic;
using testing::random_t_circuit;
using testing::Rng;
using testing::z1_coefficient;

// Thrown by check() to stop a criterion at its first mismatch.
struct Mismatch {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Mismatch{what};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<std::string()> body;  // returns a short summary
};

// ---------------------------------------------------------------- 1

std::string clifford_rules() {
  std::size_t cases = 0;
  const auto agree = [&](const Circuit& c, const PhasedPauli& p) {
    const PhasedPauli img = tableau_from_circuit(c).apply(p);
    const DenseMatrix u = unitary_of(c);
    check(u * pauli_matrix(p) * u.adjoint() == pauli_matrix(img), serialize(c) + " on " + p.to_string());
    ++cases;
  };
  for (const Gate& g : {Gate::h(0), Gate::s(0), Gate::z(0), Gate::x(0)}) {
    Circuit c(1);
    c.add(g);
    for (std::size_t i = 0; i < 4; ++i) {
      for (int ph = 0; ph < 4; ++ph) agree(c, PhasedPauli(pauli_from_index(1, i), ph));
    }
  }
  for (const Gate& g : {Gate::cz(0, 1), Gate::cz(1, 0)}) {
    Circuit c(3);
    c.add(g);
    for (std::size_t i = 0; i < 64; ++i) {
      for (int ph = 0; ph < 4; ++ph) agree(c, PhasedPauli(pauli_from_index(3, i), ph));
    }
  }
  return std::to_string(cases) + " conjugations";
}

// ---------------------------------------------------------------- 2

std::string presentation_engine() {
  Rng rng(1001);
  std::size_t paulis = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t d = (trial / 4) % 4;
    const Circuit c = random_t_circuit(rng, n, d, n + 2);
    const SymplecticVec x = random_nonzero_symplectic(rng, n);
    const Presentation p = encode(c, x);
    const std::vector<ExactScalar> want = pauli_expansion(dense_conjugate(c, x));
    ExactScalar mass;
    for (std::size_t i = 0; i < want.size(); ++i) {
      const ExactScalar got = coefficient(p, pauli_from_index(n, i));
      check(got == want[i], "trial " + std::to_string(trial) + " Pauli " + std::to_string(i));
      mass += got.norm();
      ++paulis;
    }
    check(mass.is_one(), "squared coefficients do not sum to 1, trial " + std::to_string(trial));
  }
  return "200 circuits, " + std::to_string(paulis) + " coefficients";
}

// ---------------------------------------------------------------- 3

std::string round_trip() {
  Rng rng(1002);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Presentation lam = testing::random_presentation(rng, n, trial % 4);
    const DenseMatrix u = testing::dense_presentation(lam);
    for (int k = 0; k < 2; ++k) {
      const SymplecticVec z = random_nonzero_symplectic(rng, n);
      const Circuit c = decode(lam, z);
      check(encode(c, z) == lam, "structural round trip, trial " + std::to_string(trial));
      check(dense_conjugate(c, z) == u, "unitary depends on z, trial " + std::to_string(trial));
    }
  }
  return "100 presentations, 2 outer vectors each";
}

// ---------------------------------------------------------------- 4

// Same unitary up to phase, different gate list: canonical Clifford blocks,
// an S S Z insertion before the T layer and H H pairs.
Circuit rewrite(Rng& rng, const Circuit& c) {
  const LayerDecomposition parts = layer_decompose(c);
  LayerDecomposition out;
  out.layers = parts.layers;
  const std::size_t n = c.qubits();
  for (std::size_t i = 0; i < parts.cliffords.size(); ++i) {
    Circuit block = canonical_clifford(parts.cliffords[i]);
    const std::size_t q = pick(rng, n);
    block.add(Gate::h(q)).add(Gate::h(q));
    if (i + 1 < parts.cliffords.size()) {
      const std::size_t w = pick(rng, n);
      block.add(Gate::s(w)).add(Gate::s(w)).add(Gate::z(w));
    }
    out.cliffords.push_back(block);
  }
  return recompose(out);
}

std::string teleport_determinism() {
  Rng rng(1004);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Circuit a = random_t_circuit(rng, n, 1);
    const Circuit b = rewrite(rng, a);
    check(a != b && t_depth(b) == 1, "rewrite did not change the circuit");
    check(equal_up_to_phase(unitary_of(a), unitary_of(b)), "rewrite changed the unitary");
    const SymplecticVec x = random_nonzero_symplectic(rng, n);
    check(teleport_correction(a, x) == teleport_correction(b, x), "corrections differ, trial " + std::to_string(trial));
  }
  return "50 equivalent pairs";
}

// ---------------------------------------------------------------- 5

std::string gadgets() {
  Rng rng(1005);
  const ExactScalar half = ExactScalar::inv_sqrt2_power(2);
  std::size_t checks = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Circuit c = random_t_circuit(rng, n, trial % 3, n + 2);
    const Circuit d = random_t_circuit(rng, n, 1 + trial % 2, n + 2);
    const SymplecticVec x = random_nonzero_symplectic(rng, n);
    const ExactScalar a = dense_coefficient(c, x);
    const ExactScalar b = dense_coefficient(d, x);
    const std::size_t depth = std::max(t_depth(c), t_depth(d));
    const Circuit prod = product_gadget(c, d, x);
    check(z1_coefficient(prod) == a * b, "product, trial " + std::to_string(trial));
    check(t_depth(prod) <= depth + 2, "product depth");
    const Circuit avg = average_gadget(c, d, x);
    check(z1_coefficient(avg) == (a + b) * half, "average, trial " + std::to_string(trial));
    check(t_depth(avg) <= depth + 2, "average depth");
    checks += 2;
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 3; ++trial) {
      const std::size_t n = 1 + trial % 2;
      const SymplecticVec x = random_nonzero_symplectic(rng, n);
      std::vector<Circuit> cs;
      ExactScalar sum;
      std::size_t depth = 0;
      for (std::size_t s = 0; s < k; ++s) {
        cs.push_back(random_t_circuit(rng, n, pick(rng, 2), n + 2));
        sum += dense_coefficient(cs.back(), x);
        depth = std::max(depth, t_depth(cs.back()));
      }
      const std::int64_t levels = k <= 1 ? 0 : k <= 2 ? 1 : 2;
      const Circuit u = linear_combination_gadget(cs, x);
      check(z1_coefficient(u) == sum * ExactScalar::inv_sqrt2_power(2 * levels), "k-sum, k=" + std::to_string(k));
      check(t_depth(u) <= depth + 2 * static_cast<std::size_t>(levels), "k-sum depth");
      ++checks;
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (bool neg : {false, true}) {
        const Circuit c = power_circuit(n, k, neg);
        ExactScalar want = ExactScalar::inv_sqrt2_power(static_cast<std::int64_t>(k));
        if (neg) want = -want;
        check(z1_coefficient(c) == want, "power circuit");
        check(t_depth(c) <= 1, "power circuit depth");
        ++checks;
      }
    }
  }
  return std::to_string(checks) + " gadget identities";
}

// ---------------------------------------------------------------- 6

SymplecticVec all_x(std::size_t n) {
  SymplecticVec v(n);
  for (std::size_t q = 0; q < n; ++q) v.set_x(q);
  return v;
}

std::string support_to_enic_check() {
  Rng rng(1006);
  std::size_t zero = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2;
    const Circuit c = random_t_circuit(rng, n, 1);
    const SymplecticVec z = random_nonzero_symplectic(rng, n);
    const ExactScalar target = pauli_coefficient(unitary_of(c), z);
    const SupportReduction r = support_to_enic(c, z);
    const ExactScalar alpha = pauli_coefficient(unitary_of(r.conjugated), all_x(n));
    check(alpha.norm() == target.norm(), "shifted coefficient magnitude");
    const std::size_t width = r.circuit.qubits();
    const std::size_t shift = width - n;
    const Circuit back = dagger(r.entangled).widened(width);
    bool identity = true;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      StateVector got(width, b << shift);
      got.apply(r.circuit);
      std::vector<ExactScalar> want(std::size_t{1} << width);
      want[b << shift] = ExactScalar(1);
      if (((b >> (n - 1)) & 1U) == 0) {
        const std::uint64_t flipped = (~b) & ((std::uint64_t{1} << n) - 1);
        const std::uint64_t ones = (std::uint64_t{1} << (2 * n)) - 1;
        StateVector tail(width, ((flipped << (2 * n)) | ones) << (width - 3 * n));
        tail.apply(back);
        const ExactScalar factor = alpha * ExactScalar(-2);
        for (std::size_t i = 0; i < want.size(); ++i) want[i] += factor * tail.amplitude(i);
      }
      check(got == StateVector(want), "action formula, trial " + std::to_string(trial));
      identity = identity && got.amplitude(b << shift).is_one();
    }
    check(identity == target.is_zero(), "identity iff zero coefficient, trial " + std::to_string(trial));
    zero += target.is_zero();
  }
  return "30 circuits, " + std::to_string(zero) + " with zero coefficient";
}

// ---------------------------------------------------------------- 7

bool oracle_enic(const Circuit& c) { return !is_scalar_identity(unitary_of(c)); }
bool oracle_commute(const Circuit& c, const SymplecticVec& x) {
  return dense_conjugate(c, x) == pauli_matrix(PhasedPauli(x));
}

void enic_commute_agree(const Circuit& c, bool with_bridges) {
  const std::size_t depth = t_depth(c);
  const bool polynomial = depth <= 2;
  const auto enic = decide_enic(c);
  const bool want_enic = oracle_enic(c);
  check(enic.answer == want_enic, "ENIC on " + serialize(c));
  if (polynomial) check(enic.method != DecisionMethod::Enumerative && enic.method != DecisionMethod::Oracle, "ENIC path");
  if (depth == 2) check(enic.method == DecisionMethod::Depth2Peel, "ENIC depth-2 tag");
  if (with_bridges) {
    bool all = true;
    for (const auto& [d, p] : enic_to_commute(c)) all = all && oracle_commute(d, p);
    check(all == !want_enic, "ENIC to COMMUTE bridge");
  }
  for (std::size_t i = 1; i < (std::size_t{1} << (2 * c.qubits())); ++i) {
    const SymplecticVec x = pauli_from_index(c.qubits(), i);
    const auto com = decide_commute(c, x);
    const bool want = oracle_commute(c, x);
    check(com.answer == want, "COMMUTE on " + serialize(c));
    if (depth == 2) check(com.method == DecisionMethod::Depth2Peel, "COMMUTE depth-2 tag");
    if (with_bridges) {
      const auto pair = commute_to_enic(c, x);
      check(commute_from_enic(oracle_enic(pair.u), oracle_enic(pair.v)) == want, "COMMUTE to ENIC bridge");
    }
  }
}

std::string enic_commute() {
  const std::vector<Gate> alphabet{Gate::h(0), Gate::s(0), Gate::t(0), Gate::x(0), Gate::z(0)};
  std::size_t sweep = 0;
  std::vector<std::size_t> digits;
  for (std::size_t len = 0; len <= 6; ++len) {
    digits.assign(len, 0);
    for (;;) {
      Circuit c(1);
      for (auto d : digits) c.add(alphabet[d]);
      enic_commute_agree(c, true);
      ++sweep;
      std::size_t pos = 0;
      while (pos < len && ++digits[pos] == alphabet.size()) digits[pos++] = 0;
      if (pos == len) break;
    }
  }
  Rng rng(1007);
  std::size_t depth2 = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 2;
    Circuit c = random_t_circuit(rng, n, trial % 3, n + 2);
    // Every fourth instance is a disguised identity or Pauli, so yes and no both occur.
    if (trial % 4 == 3) {
      const Circuit half = random_t_circuit(rng, n, 1, n + 2);
      c = half;
      c.add(Gate::z(pick(rng, n)));
      c.append(dagger(half));
    }
    depth2 += t_depth(c) == 2;
    enic_commute_agree(c, false);
  }
  return std::to_string(sweep) + " one-wire circuits, 100 random (" + std::to_string(depth2) + " of T-depth 2)";
}

// ---------------------------------------------------------------- 8

// Brute force over all 2^k combinations of generator rows.
std::vector<std::uint64_t> brute_distribution(const F2Matrix& g) {
  std::set<F2Vec> words;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.rows()); ++mask) {
    F2Vec w(g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if ((mask >> i) & 1U) w ^= g.row(i);
    }
    words.insert(w);
  }
  std::vector<std::uint64_t> dist(g.cols() + 1, 0);
  for (const auto& w : words) ++dist[w.popcount()];
  return dist;
}

std::vector<std::vector<std::string>> all_p(std::size_t k, std::size_t cols) {
  std::vector<std::vector<std::string>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k * cols)); ++mask) {
    std::vector<std::string> rows(k, std::string(cols, '0'));
    for (std::size_t i = 0; i < k * cols; ++i) {
      if ((mask >> i) & 1U) rows[i / cols][i % cols] = '1';
    }
    out.push_back(rows);
  }
  return out;
}

std::string code_embedding() {
  struct Block {
    std::size_t r, s;
  };
  std::size_t codes = 0;
  std::size_t chains_off_outer = 0;
  for (const Block bl : {Block{1, 0}, Block{1, 4}, Block{5, 0}}) {
    for (std::size_t k = 1; k <= 2; ++k) {
      for (std::size_t cols = 0; k * bl.r + cols * bl.s <= 8; ++cols) {
        if (bl.s == 0 && cols > 0) break;
        for (const auto& rows : all_p(k, cols)) {
          F2Matrix pm(k, cols);
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < cols; ++j) pm.set(i, j, rows[i][j] == '1');
          }
          const OneRemainderMatrix g = build_one_remainder(pm, bl.r, bl.s);
          const std::size_t n = g.length();
          const auto dist = brute_distribution(g.generator());
          std::uint64_t size = 0;
          RealRoot2 wt(0);
          for (std::size_t j = 0; j <= n; ++j) {
            size += dist[j];
            wt = wt + RealRoot2(static_cast<std::int64_t>(dist[j])) * RealRoot2::inv_sqrt2_power(static_cast<std::int64_t>(j));
          }
          std::int64_t log_size = 0;
          while ((std::uint64_t{1} << log_size) < size) ++log_size;
          const RealRoot2 want = wt * RealRoot2::inv_sqrt2_power(static_cast<std::int64_t>(n) + log_size);
          const Presentation p = code_to_presentation(g);
          check(p.depth() == 3, "depth");
          check(coefficient(p, p.outer()) == want.to_exact(), "coefficient, n=" + std::to_string(n));
          check(sign_is_zero_towards(p, p.outer()), "sign on chains ending at the outer vector, n=" + std::to_string(n));
          for_each_chain(p, [&](const Chain& c) { chains_off_outer += c.sign; });
          ++codes;
        }
      }
    }
  }
  return std::to_string(codes) + " codes; sign zero on every chain ending at the outer vector (" +
         std::to_string(chains_off_outer) + " signed chains end elsewhere)";
}

// ---------------------------------------------------------------- 9

std::vector<std::vector<QSqrt2>> vandermonde_matrix(const std::vector<QSqrt2>& nodes) {
  std::vector<std::vector<QSqrt2>> m;
  for (const auto& x : nodes) {
    std::vector<QSqrt2> row{QSqrt2(1)};
    for (std::size_t j = 1; j < nodes.size(); ++j) row.push_back(row.back() * x);
    m.push_back(row);
  }
  return m;
}

std::string binary_weight() {
  std::vector<OneRemainderMatrix> codes{build_one_remainder(F2Matrix::from_strings({"11"}), 1, 4),
                                        build_one_remainder(F2Matrix::from_strings({"1"}), 1, 4)};
  Rng rng(1009);
  for (int i = 0; i < 10; ++i) {
    const std::size_t k = 1 + i % 3;
    F2Matrix p(k, 1);
    for (std::size_t r = 0; r < k; ++r) p.row(r) = testing::random_bits(rng, 1);
    codes.push_back(i == 9 ? build_one_remainder(F2Matrix(1, 0), 5, 0) : build_one_remainder(p, 1, 4));
  }
  std::size_t instances = 0;
  for (const auto& g : codes) {
    const auto dist = brute_distribution(g.generator());
    for (std::size_t t = 0; t <= g.length(); ++t) {
      const auto r = binary_weight_to_circuit(g, t);
      check(r.certificate.predicted.is_zero() == (dist[t] == 0),
            "n=" + std::to_string(g.length()) + " t=" + std::to_string(t));
      ++instances;
    }
  }
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto nodes = weight_nodes(n);
    const auto m = vandermonde_matrix(nodes);
    const auto inv = vandermonde_inverse(nodes);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        QSqrt2 s;
        for (std::size_t l = 0; l <= n; ++l) s = s + m[i][l] * inv[l][j];
        check(s == QSqrt2(i == j ? 1 : 0), "Vandermonde inverse, n=" + std::to_string(n));
      }
    }
  }
  return std::to_string(codes.size()) + " codes, " + std::to_string(instances) + " (code, t) instances";
}

// ---------------------------------------------------------------- 10

std::string distribution_recovery() {
  Rng rng(1010);
  for (int i = 0; i < 10; ++i) {
    const std::size_t k = 1 + i % 3;
    const std::size_t n = 3 + i % 4;
    F2Matrix p(k, n);
    for (std::size_t r = 0; r < k; ++r) p.row(r) = testing::random_bits(rng, n);
    const auto got = recover_distribution_1mod4(p, evaluate_by_presentation);
    check(got == brute_distribution(p), "code " + std::to_string(i));
  }
  return "10 codes recovered";
}

}  // namespace
}  // namespace pconj

int main() {
  using namespace pconj;
  const std::vector<Criterion> all{
      {1, "clifford-update-rules", 1, clifford_rules},
      {2, "presentation-coefficients", 120, presentation_engine},
      {3, "encode-decode-round-trip", 60, round_trip},
      {4, "depth1-correction-determinism", 60, teleport_determinism},
      {5, "coefficient-gadgets", 120, gadgets},
      {6, "support-to-enic", 300, support_to_enic_check},
      {7, "enic-commute-reductions", 180, enic_commute},
      {8, "code-embedding", 120, code_embedding},
      {9, "binary-weight-pipeline", 600, binary_weight},
      {10, "weight-distribution-recovery", 120, distribution_recovery},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const Mismatch& m) {
      ok = false;
      detail = "mismatch: " + m.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_s) {
      ok = false;
      detail += " (over the time limit)";
    }
    failed += !ok;
    std::printf("%s %2d %-30s %8.2fs  %s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
