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


// pconj command-line front end.
//
// Exit status: 0 success, 1 decision false (decide with --exit-status) or a
// failed verify check, 2 usage or input error, 3 budget exceeded.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include "pconj/code_reduction.hpp"
#include "pconj/coding.hpp"
#include "pconj/decision.hpp"
#include "pconj/dense.hpp"
#include "pconj/presentation.hpp"
#include "pconj/support_reduction.hpp"
#include "pconj/vandermonde.hpp"

namespace {

using namespace pconj;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// "Z1", "X1Z3", "X1 Y2" (1-based wires) or one letter per wire ("XIZ").
SymplecticVec parse_pauli_arg(const std::string& text, std::size_t n) {
  static const std::regex sparse(R"(^\s*([XYZ]\d+\s*)+$)");
  if (std::regex_match(text, sparse)) {
    SymplecticVec v(n);
    static const std::regex term(R"(([XYZ])(\d+))");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator(); ++it) {
      const char kind = (*it)[1].str()[0];
      const std::size_t wire = std::stoul((*it)[2].str());
      if (wire == 0 || wire > n) throw UsageError("Pauli wire out of range: " + it->str());
      if (kind != 'Z') v.set_x(wire - 1, !v.x(wire - 1));
      if (kind != 'X') v.set_z(wire - 1, !v.z(wire - 1));
    }
    return v;
  }
  const PhasedPauli p = PhasedPauli::parse(text);
  if (p.phase != 0) throw UsageError("the Pauli must be given without a phase");
  if (p.n() != n) throw UsageError("Pauli has " + std::to_string(p.n()) + " wires, expected " + std::to_string(n));
  return p.v;
}

std::string letters(const SymplecticVec& v) { return PhasedPauli(v).to_string(); }

std::string describe(const ExactScalar& x) {
  char approx[64];
  if (x.is_real()) {
    std::snprintf(approx, sizeof approx, "%.9g", x.to_complex().real());
    return QSqrt2::from(x).to_real_root2().to_string() + "  (~" + approx + ")";
  }
  const auto c = x.to_complex();
  std::snprintf(approx, sizeof approx, "%.9g%+.9gi", c.real(), c.imag());
  return x.to_string() + "  (~" + approx + ")";
}

struct Common {
  std::uint64_t max_chains = std::uint64_t{1} << 22;
  std::size_t max_qubits_oracle = 0;

  DecisionOptions decision() const {
    DecisionOptions o;
    o.budget.node_budget = max_chains;
    o.oracle_qubits = max_qubits_oracle;
    return o;
  }
  CoefficientOptions budget() const { return {max_chains}; }
};

// ------------------------------------------------------------------ stats

int cmd_stats(const std::string& path) {
  const Circuit c = parse_circuit(read_input(path));
  std::cout << "qubits " << c.qubits() << "\n"
            << "gates " << c.size() << "\n"
            << "t-count " << t_count(c) << "\n"
            << "t-depth " << t_depth(c) << "\n"
            << "clifford " << (c.is_clifford() ? "yes" : "no") << "\n";
  return kOk;
}

// -------------------------------------------------------------- conjugate

int cmd_conjugate(const std::string& path, const std::string& pauli, const Common& common) {
  const Circuit c = parse_circuit(read_input(path));
  const SymplecticVec x = parse_pauli_arg(pauli, c.qubits());
  const auto terms = expansion(encode(c, x), common.budget());
  for (const auto& [z, a] : terms) std::cout << letters(z) << "  " << describe(a) << "\n";
  return kOk;
}

// --------------------------------------------------------- encode / decode

int cmd_encode(const std::string& path, const std::string& pauli, const std::string& out) {
  const Circuit c = parse_circuit(read_input(path));
  write_output(out, serialize(encode(c, parse_pauli_arg(pauli, c.qubits()))));
  return kOk;
}

int cmd_decode(const std::string& path, const std::string& pauli, const std::string& out) {
  const Presentation p = parse_presentation(read_input(path));
  const SymplecticVec z = pauli.empty() ? p.outer() : parse_pauli_arg(pauli, p.qubits());
  write_output(out, serialize(decode(p, z)));
  return kOk;
}

// ------------------------------------------------------------------ decide

int report(const DecisionResult& r, bool exit_status) {
  std::cout << (r.answer ? "yes-instance" : "no-instance") << "\n"
            << "method " << method_tag(r.method) << "\n"
            << "t-depth " << r.resources.t_depth << "\n";
  return exit_status && !r.answer ? kFalse : kOk;
}

int cmd_decide(const std::string& problem, const std::string& path, const std::string& pauli, bool exit_status,
               const Common& common) {
  const Circuit c = parse_circuit(read_input(path));
  if (problem == "enic") return report(decide_enic(c, common.decision()), exit_status);
  if (pauli.empty()) throw UsageError("decide " + problem + " needs --pauli");
  const SymplecticVec x = parse_pauli_arg(pauli, c.qubits());
  if (problem == "commute") return report(decide_commute(c, x, common.decision()), exit_status);
  const DecisionResult r = problem == "support" ? decide_support(c, x, common.decision())
                                                : conjugate_value(c, x, common.decision());
  const int code = report(r, exit_status);
  std::cout << "coefficient " << describe(r.value) << "\n";
  return code;
}

// ------------------------------------------------------------------ reduce

OneRemainderMatrix read_one_remainder(const std::string& path) {
  const F2Matrix g = parse_code(read_input(path));
  const auto m = recognize_one_remainder(g);
  if (!m) throw UsageError(path + " is not a 1-remainder generator");
  return *m;
}

int cmd_reduce(const std::string& kind, const std::string& path, const std::string& pauli, std::size_t t,
               const std::string& out, const std::string& cert_path) {
  if (kind == "support-to-enic") {
    const Circuit c = parse_circuit(read_input(path));
    if (pauli.empty()) throw UsageError("reduce support-to-enic needs --pauli");
    const SupportReduction r = support_to_enic(c, parse_pauli_arg(pauli, c.qubits()));
    write_output(out, serialize(r.circuit));
    std::cerr << "data wires " << r.data << ", ancillas " << r.ancillas << ", t-depth " << t_depth(r.circuit)
              << "\n";
    return kOk;
  }
  const OneRemainderMatrix g = read_one_remainder(path);
  if (kind == "code-embed") {
    const Circuit c = code_circuit(g);
    write_output(out, serialize(c));
    std::cerr << "coefficient at Z1 " << code_coefficient(g).to_string() << ", t-depth " << t_depth(c) << "\n";
    return kOk;
  }
  const BinaryWeightReduction r = binary_weight_to_circuit(g, t);
  if (!out.empty()) write_output(out, serialize(r.circuit));
  write_output(cert_path, serialize(r.certificate));
  std::cerr << "qubits " << r.circuit.qubits() << ", t-depth " << t_depth(r.circuit) << ", predicted "
            << r.certificate.predicted.to_string() << "\n";
  return kOk;
}

// -------------------------------------------------------------------- code

int cmd_code(const std::string& what, const std::string& path) {
  const BinaryCode v(parse_code(read_input(path)));
  const auto dist = weight_distribution(v);
  if (what == "distribution") {
    for (std::size_t j = 0; j < dist.size(); ++j) std::cout << (j ? " " : "") << dist[j];
    std::cout << "\n";
    return kOk;
  }
  std::string poly;
  for (std::size_t j = 0; j < dist.size(); ++j) {
    if (dist[j] == 0) continue;
    if (!poly.empty()) poly += " + ";
    const std::string mono = j == 0 ? "" : j == 1 ? "x" : "x^" + std::to_string(j);
    if (dist[j] != 1 || j == 0) poly += std::to_string(dist[j]) + (mono.empty() ? "" : "*");
    poly += mono;
  }
  std::cout << "wt(x) = " << poly << "\n"
            << "wt(1/sqrt2) = " << wt_eval(v, RealRoot2::inv_sqrt2_power(1)).to_string() << "\n";
  return kOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& path, const std::string& pauli, const Common& common) {
  const Circuit c = parse_circuit(read_input(path));
  const std::size_t limit = common.max_qubits_oracle == 0 ? 8 : common.max_qubits_oracle;
  if (c.qubits() > limit) throw UsageError("circuit too wide for the dense oracle (raise --max-qubits-oracle)");
  std::vector<SymplecticVec> xs;
  if (!pauli.empty()) {
    xs.push_back(parse_pauli_arg(pauli, c.qubits()));
  } else {
    for (std::size_t j = 0; j < c.qubits(); ++j) {
      xs.push_back(SymplecticVec::e_z(c.qubits(), j));
      xs.push_back(SymplecticVec::e_x(c.qubits(), j));
    }
  }
  const DenseMatrix u = unitary_of(c);
  int failures = 0;
  const auto line = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
    failures += !ok;
  };
  DecisionOptions plain = common.decision();
  plain.oracle_qubits = 0;
  line(decide_enic(c, plain).answer == !is_scalar_identity(u), "enic");
  for (const auto& x : xs) {
    const DenseMatrix conj = u * pauli_matrix(PhasedPauli(x)) * u.adjoint();
    const Presentation p = encode(c, x);
    const auto want = pauli_expansion(conj);
    bool coeffs = true;
    for (std::size_t i = 0; i < want.size() && coeffs; ++i) {
      coeffs = coefficient(p, pauli_from_index(c.qubits(), i), common.budget()) == want[i];
    }
    const std::string tag = letters(x);
    line(coeffs, "expansion " + tag);
    line(encode(decode(p, x), x) == p, "round-trip " + tag);
    line(decide_commute(c, x, plain).answer == (conj == pauli_matrix(PhasedPauli(x))), "commute " + tag);
    line(conjugate_value(c, x, plain).value == pauli_coefficient(conj, x), "self-coefficient " + tag);
  }
  return failures == 0 ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli conjugation by Clifford+T circuits"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--max-chains", common.max_chains, "Chain enumeration budget")->capture_default_str();
  app.add_option("--max-qubits-oracle", common.max_qubits_oracle,
                 "Use the dense oracle for deep circuits up to this width (0 = never)")
      ->capture_default_str();
  // verify always uses the oracle; without the flag it accepts up to 8 wires.

  std::string input;
  std::string pauli;
  std::string output;
  std::string cert;
  std::string kind;
  std::size_t t = 0;
  bool exit_status = false;

  auto* stats = app.add_subcommand("stats", "T-count and T-depth of a circuit");
  stats->add_option("circuit", input, "Circuit file ('-' for stdin)")->required();

  auto* conj = app.add_subcommand("conjugate", "Pauli expansion of C P C^dagger");
  conj->add_option("circuit", input)->required();
  conj->add_option("--pauli", pauli, "Pauli, e.g. Z1 or XIZ")->required();

  auto* enc = app.add_subcommand("encode", "Presentation of C P C^dagger");
  enc->add_option("circuit", input)->required();
  enc->add_option("--pauli", pauli)->required();
  enc->add_option("-o,--output", output);

  auto* dec = app.add_subcommand("decode", "Circuit for a presentation");
  dec->add_option("presentation", input)->required();
  dec->add_option("--pauli", pauli, "Pauli the circuit conjugates (default: the outer vector)");
  dec->add_option("-o,--output", output);

  auto* decide = app.add_subcommand("decide", "Decide enic, commute, support or conjugate");
  decide->add_option("problem", kind)->required()->check(CLI::IsMember({"enic", "commute", "support", "conjugate"}));
  decide->add_option("circuit", input)->required();
  decide->add_option("--pauli", pauli);
  decide->add_flag("--exit-status", exit_status, "Exit 1 when the answer is no");

  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
  reduce->add_option("kind", kind)->required()->check(CLI::IsMember({"support-to-enic", "binary-weight", "code-embed"}));
  reduce->add_option("input", input, "Circuit or code file")->required();
  reduce->add_option("--pauli", pauli);
  reduce->add_option("--t", t, "Target weight for binary-weight");
  reduce->add_option("-o,--output", output, "Circuit output file");
  reduce->add_option("--certificate", cert, "Certificate output file (default stdout)");

  auto* code = app.add_subcommand("code", "Weight enumerator of a binary code");
  code->add_option("what", kind)->required()->check(CLI::IsMember({"wt", "distribution"}));
  code->add_option("code", input)->required();

  auto* verify = app.add_subcommand("verify", "Cross-check a circuit against the dense oracle");
  verify->add_option("circuit", input)->required();
  verify->add_option("--pauli", pauli);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*stats) return cmd_stats(input);
    if (*conj) return cmd_conjugate(input, pauli, common);
    if (*enc) return cmd_encode(input, pauli, output);
    if (*dec) return cmd_decode(input, pauli, output);
    if (*decide) return cmd_decide(kind, input, pauli, exit_status, common);
    if (*reduce) return cmd_reduce(kind, input, pauli, t, output, cert);
    if (*code) return cmd_code(kind, input);
    if (*verify) return cmd_verify(input, pauli, common);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
