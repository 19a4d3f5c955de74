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


#include "pconj/code_reduction.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "pconj/branching.hpp"
#include "pconj/gadgets.hpp"
#include "pconj/vandermonde.hpp"

namespace pconj {

namespace {

SymplecticVec all_x(std::size_t n) {
  SymplecticVec v(n);
  for (std::size_t q = 0; q < n; ++q) v.set_x(q);
  return v;
}

// sqrt2^m for any integer m.
RealRoot2 sqrt2_power(std::int64_t m) { return RealRoot2::inv_sqrt2_power(-m); }

RealRoot2 alpha_power(std::int64_t e) { return RealRoot2::inv_sqrt2_power(e); }

std::string value_text(const RealRoot2& v) {
  std::ostringstream os;
  os << v.a() << ' ' << v.b() << ' ' << v.denom_exp();
  return os.str();
}

RealRoot2 read_value(std::istream& in) {
  std::string a;
  std::string b;
  std::int64_t l = 0;
  if (!(in >> a >> b >> l)) throw std::invalid_argument("certificate: malformed value");
  return RealRoot2(BigInt(a), BigInt(b), l);
}

std::string rest_of(std::istream& in) {
  std::string s;
  std::getline(in, s);
  const auto start = s.find_first_not_of(' ');
  return start == std::string::npos ? std::string() : s.substr(start);
}

}  // namespace

Presentation code_to_presentation(const OneRemainderMatrix& g) {
  const F2Matrix gen = g.generator();
  const std::size_t n = gen.cols();
  std::vector<SymplecticVec> rows;
  rows.reserve(gen.rows());
  for (const auto& r : gen.row_list()) rows.emplace_back(r, F2Vec(n));
  std::vector<PresentationLayer> layers;
  layers.push_back({OrderedBasis(n, std::move(rows)), F2Vec::ones(gen.rows())});
  layers.push_back({OrderedBasis::standard_x(n, n), F2Vec(n)});
  layers.push_back({OrderedBasis::standard_z(n, n), F2Vec(n)});
  return Presentation(n, std::move(layers), all_x(n), false);
}

RealRoot2 code_coefficient(const OneRemainderMatrix& g) {
  const auto code = g.code();
  const auto wt = wt_eval(code, alpha_power(1));
  return wt * alpha_power(static_cast<std::int64_t>(code.length() + code.rank()));
}

ExactScalar code_coefficient_by_branching(const OneRemainderMatrix& g) {
  const Presentation p = code_to_presentation(g);
  const F2Vec y0 = p.outer().bits();
  return branching_coeff_d3(branching_of(p), y0, y0);
}

Circuit code_circuit(const OneRemainderMatrix& g) {
  const Presentation p = code_to_presentation(g);
  return shift_to_z1(decode(p, p.outer()), p.outer());
}

std::string_view relation_tag(Relation r) {
  switch (r) {
    case Relation::CodeEmbedding:
      return "code-embedding";
    case Relation::ScaledDigits:
      return "scaled-digits";
    case Relation::Product:
      return "product";
    case Relation::PowerOfTwo:
      return "power-of-two";
    case Relation::Combination:
      return "combination";
    case Relation::ZeroIffNoWeight:
      return "zero-iff-no-weight";
  }
  return "?";
}

Relation parse_relation(std::string_view tag) {
  for (auto r : {Relation::CodeEmbedding, Relation::ScaledDigits, Relation::Product, Relation::PowerOfTwo,
                 Relation::Combination, Relation::ZeroIffNoWeight}) {
    if (relation_tag(r) == tag) return r;
  }
  throw std::invalid_argument("unknown relation '" + std::string(tag) + "'");
}

std::string serialize(const ReductionCertificate& c) {
  std::ostringstream out;
  out << "certificate\n";
  out << "source " << c.source << '\n';
  out << "relation " << relation_tag(c.relation) << '\n';
  out << "predicted " << value_text(c.predicted) << '\n';
  for (const auto& cl : c.claims) {
    out << "claim " << relation_tag(cl.relation) << ' ' << cl.qubits << ' ' << cl.t_depth << ' '
        << value_text(cl.value) << ' ' << cl.label << '\n';
  }
  for (const auto& note : c.notes) out << "note " << note << '\n';
  out << "end\n";
  return out.str();
}

ReductionCertificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  ReductionCertificate c;
  bool started = false;
  bool ended = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (!started) {
      if (head != "certificate") throw std::invalid_argument("certificate: missing header");
      started = true;
    } else if (head == "source") {
      c.source = rest_of(ls);
    } else if (head == "relation") {
      std::string tag;
      ls >> tag;
      c.relation = parse_relation(tag);
    } else if (head == "predicted") {
      c.predicted = read_value(ls);
    } else if (head == "claim") {
      CoefficientClaim cl;
      std::string tag;
      if (!(ls >> tag >> cl.qubits >> cl.t_depth)) throw std::invalid_argument("certificate: malformed claim");
      cl.relation = parse_relation(tag);
      cl.value = read_value(ls);
      cl.label = rest_of(ls);
      c.claims.push_back(std::move(cl));
    } else if (head == "note") {
      c.notes.push_back(rest_of(ls));
    } else if (head == "end") {
      ended = true;
      break;
    } else {
      throw std::invalid_argument("certificate: unknown line '" + head + "'");
    }
  }
  if (!ended) throw std::invalid_argument("certificate: missing end");
  return c;
}

BinaryWeightReduction binary_weight_to_circuit(const OneRemainderMatrix& g, std::size_t t) {
  const std::size_t n = g.length();
  const std::size_t k = g.k;
  BinaryWeightReduction out;
  auto& cert = out.certificate;
  {
    std::ostringstream src;
    src << "binary-weight t=" << t << " n=" << n << " k=" << k << " r=" << g.r << " s=" << g.s;
    cert.source = src.str();
  }
  cert.relation = Relation::ZeroIffNoWeight;

  auto record = [&out](Relation rel, std::string label, RealRoot2 value, Circuit c) {
    out.certificate.claims.push_back({rel, std::move(label), std::move(value), c.qubits(), t_depth(c)});
    out.parts.push_back(std::move(c));
  };

  if (t > n) {
    out.circuit = zero_coefficient_clifford(1, SymplecticVec::e_z(1, 0));
    cert.predicted = RealRoot2(0);
    cert.notes.push_back("weight exceeds the length; fixed zero-coefficient Clifford");
    return out;
  }

  const auto dist = weight_distribution(g.code());
  const auto row = vandermonde_inverse_row(n, t);

  struct Term {
    Circuit circuit;
    RealRoot2 value;
    std::int64_t exponent = 0;  // value = gamma_j beta d_tj / sqrt2^exponent
  };
  std::vector<Term> terms;
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t reps = 4 * j + 1;
    const auto code = build_one_remainder(g.p, g.r * reps, g.s * reps);
    const std::int64_t nj = static_cast<std::int64_t>(code.length());
    const RealRoot2 gamma = wt_eval(dist, alpha_power(static_cast<std::int64_t>(reps)));
    const RealRoot2 kappa = gamma * alpha_power(nj + static_cast<std::int64_t>(k));
    Circuit cc = code_circuit(code);

    const RealRoot2& c = row[j];
    const RealRoot2 digits_value(c.a(), c.b(), 0);
    GBCircuit gb = gb_circuit(gb_from_value(digits_value));
    const RealRoot2 gval = digits_value * RealRoot2(1, 0, gb.ell);

    const std::size_t width = std::max(cc.qubits(), gb.circuit.qubits());
    Circuit prod = product_gadget(cc.widened(width), gb.circuit.widened(width), SymplecticVec::e_z(width, 0));
    const std::string tag = "j=" + std::to_string(j);
    const RealRoot2 pval = kappa * gval;
    record(Relation::CodeEmbedding, tag + " repeat=" + std::to_string(reps), kappa, std::move(cc));
    record(Relation::ScaledDigits, tag + " ell=" + std::to_string(gb.ell), gval, std::move(gb.circuit));
    record(Relation::Product, tag, pval, prod);
    terms.push_back({std::move(prod), pval, nj + static_cast<std::int64_t>(k) + 2 * gb.ell - 2 * c.denom_exp()});
  }

  std::int64_t top = 0;
  for (const auto& term : terms) top = std::max(top, term.exponent);
  std::vector<Circuit> aligned;
  std::vector<RealRoot2> aligned_values;
  std::size_t width = 1;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    auto& term = terms[j];
    const auto shift = static_cast<std::size_t>(top - term.exponent);
    const std::size_t w = std::max({term.circuit.qubits(), shift, std::size_t{1}});
    Circuit pc = power_circuit(w, shift, false);
    const RealRoot2 power_value = alpha_power(static_cast<std::int64_t>(shift));
    Circuit al = product_gadget(term.circuit.widened(w), pc, SymplecticVec::e_z(w, 0));
    const std::string tag = "j=" + std::to_string(j);
    record(Relation::PowerOfTwo, tag + " k=" + std::to_string(shift), power_value, std::move(pc));
    aligned_values.push_back(term.value * power_value);
    record(Relation::Product, tag + " aligned", aligned_values.back(), al);
    width = std::max(width, al.qubits());
    aligned.push_back(std::move(al));
    term.circuit = Circuit();
  }
  for (auto& a : aligned) a = a.widened(width);
  const std::size_t padded_log = aligned.size() <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(aligned.size() - 1));
  out.circuit = linear_combination_gadget(aligned, SymplecticVec::e_z(width, 0));
  RealRoot2 sum;
  for (const auto& v : aligned_values) sum += v;
  cert.predicted = sum * RealRoot2(1, 0, static_cast<std::int64_t>(padded_log));
  record(Relation::Combination, "final", cert.predicted, out.circuit);
  out.parts.back() = Circuit();  // the final circuit is out.circuit

  cert.notes.push_back("each code circuit shifts X^n to Z_1 with clifford_shift");
  cert.notes.push_back("predicted = 2^-c sqrt2^-E beta b_t with c=" + std::to_string(padded_log) +
                       " E=" + std::to_string(top));
  cert.notes.push_back("beta = " + vandermonde_beta(n).to_string());
  return out;
}

RealRoot2 evaluate_by_distribution(const OneRemainderMatrix& g) { return wt_eval(g.code(), alpha_power(1)); }

RealRoot2 evaluate_by_presentation(const OneRemainderMatrix& g) {
  const auto coeff = QSqrt2::from(code_coefficient_by_branching(g)).to_real_root2();
  return coeff * sqrt2_power(static_cast<std::int64_t>(g.length() + g.k));
}

std::vector<std::uint64_t> recover_distribution_1mod4(const F2Matrix& p, const WeightEvaluator& evaluator) {
  const std::size_t k = p.rows();
  const std::size_t n = p.cols();
  if (k == 0) {
    std::vector<std::uint64_t> d(n + 1, 0);
    d[0] = 1;
    return d;
  }
  const std::size_t m = k / 4 + 1;
  const std::size_t len = k + 4 * m * n;
  std::vector<QSqrt2> values;
  values.reserve(len + 1);
  for (std::size_t i = 0; i <= len; ++i) {
    const std::size_t l = 4 * i + 1;
    values.push_back(QSqrt2::from(evaluator(build_one_remainder(p, l, 4 * m * l))));
  }
  const auto a = vandermonde_solve_integer(weight_nodes(len), values);
  // Weight of (v, vP...vP) is |v| + 4m|vP| and |v| <= k < 4m, so each a_w
  // holds a single (|v|, |vP|) class.
  std::vector<BigInt> b(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t r = 0; r <= k; ++r) b[i] += a[r + 4 * i * m];
  }
  const std::size_t rank = rank_of(p.row_list(), n);
  std::vector<std::uint64_t> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const BigInt q = b[i] >> static_cast<unsigned>(k - rank);
    if ((q << static_cast<unsigned>(k - rank)) != b[i]) throw std::logic_error("recovered count not divisible by the kernel size");
    out[i] = static_cast<std::uint64_t>(q);
  }
  return out;
}

}  // namespace pconj
