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


#include "pconj/gadgets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "pconj/pauli.hpp"
#include "pconj/synthesis.hpp"

namespace pconj {

namespace {

SymplecticVec pv(const char* text) { return PhasedPauli::parse(text).v; }

void require_nonzero(const SymplecticVec& x, std::size_t n) {
  if (x.n() != n) throw std::invalid_argument("Pauli width does not match the circuit");
  if (x.is_zero()) throw std::invalid_argument("gadget needs a nonzero Pauli");
}

std::size_t ceil_log2(std::size_t k) { return k <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(k - 1)); }

SymplecticVec doubled(const SymplecticVec& x) {
  return SymplecticVec(F2Vec::concat(x.z_part(), x.z_part()), F2Vec::concat(x.x_part(), x.x_part()));
}

void cnot(Circuit& c, std::size_t ctrl, std::size_t tgt) {
  c.add(Gate::h(tgt));
  c.add(Gate::cz(ctrl, tgt));
  c.add(Gate::h(tgt));
}

void t_dagger_tail(Circuit& c, std::size_t q) {
  c.add(Gate::s(q));
  c.add(Gate::z(q));
}

using Triple = std::array<std::size_t, 3>;

// 4abc = a + b + c - (a^b) - (a^c) - (b^c) + (a^b^c), one parity set per T
// layer: {a, b, c}, {a^b^c, a^b, a^c}, {b^c}.
void append_ccz_parallel(Circuit& c, const std::vector<Triple>& triples) {
  for (const auto& [a, b, t] : triples) {
    c.add(Gate::t(a)).add(Gate::t(b)).add(Gate::t(t));
  }
  for (const auto& [a, b, t] : triples) {
    cnot(c, a, b);
    cnot(c, a, t);
    cnot(c, b, a);
    cnot(c, t, a);
  }
  for (const auto& [a, b, t] : triples) {
    c.add(Gate::t(a)).add(Gate::t(b)).add(Gate::t(t));
    t_dagger_tail(c, b);
    t_dagger_tail(c, t);
  }
  for (const auto& [a, b, t] : triples) cnot(c, b, t);
  for (const auto& [a, b, t] : triples) {
    c.add(Gate::t(t));
    t_dagger_tail(c, t);
  }
  for (const auto& [a, b, t] : triples) {
    cnot(c, b, t);
    cnot(c, t, a);
    cnot(c, b, a);
    cnot(c, a, t);
    cnot(c, a, b);
  }
}

}  // namespace

Circuit tensor_aligned(const Circuit& a, const Circuit& b, std::size_t width, std::size_t b_offset) {
  if (a.qubits() > b_offset || b_offset + b.qubits() > width) throw std::invalid_argument("tensor factors overlap");
  const auto da = layer_decompose(a);
  const auto db = layer_decompose(b);
  const std::size_t depth = std::max(da.depth(), db.depth());
  LayerDecomposition out;
  for (std::size_t j = 0; j <= depth; ++j) {
    Circuit block(width);
    if (j < da.cliffords.size()) block.append(da.cliffords[j]);
    if (j < db.cliffords.size()) block.append_shifted(db.cliffords[j], b_offset);
    out.cliffords.push_back(std::move(block));
    if (j == depth) break;
    F2Vec mask(width);
    if (j < da.depth()) {
      for (auto q : da.layers[j].support()) mask.set(q);
    }
    if (j < db.depth()) {
      for (auto q : db.layers[j].support()) mask.set(q + b_offset);
    }
    out.layers.push_back(std::move(mask));
  }
  return recompose(out);
}

Circuit shift_to_z1(const Circuit& c, const SymplecticVec& x) {
  require_nonzero(x, c.qubits());
  const auto z1 = SymplecticVec::e_z(c.qubits(), 0);
  if (x == z1) return c;
  return clifford_shift(c, x, x, z1, z1);
}

Circuit zero_coefficient_clifford(std::size_t n, const SymplecticVec& x) {
  require_nonzero(x, n);
  auto w = SymplecticVec::e_z(n, 0);
  if (w == x) w = SymplecticVec::e_x(n, 0);
  Circuit out(n);
  out.append(transport_pauli(PhasedPauli(x), PhasedPauli(w)));
  return out;
}

Circuit product_gadget(const Circuit& c, const Circuit& d, const SymplecticVec& x) {
  const std::size_t n = c.qubits();
  if (d.qubits() != n) throw std::invalid_argument("product gadget needs equal widths");
  require_nonzero(x, n);
  return shift_to_z1(tensor_aligned(c, d, 2 * n, n), doubled(x));
}

Circuit average_gadget(const Circuit& c, const Circuit& d, const SymplecticVec& x) {
  const std::size_t n = c.qubits();
  if (d.qubits() != n) throw std::invalid_argument("average gadget needs equal widths");
  require_nonzero(x, n);
  const Circuit cs = shift_to_z1(c, x);
  const Circuit ds = shift_to_z1(d, x);

  // Q on wires 0..n (extra wire n): carries X_1 through C while fixing Y_1.
  const Circuit f = transport_pair(pv("XI"), pv("YI"), pv("ZX"), pv("IZ"));
  const Circuit g = transport_pair(pv("ZX"), pv("IZ"), pv("ZI"), pv("YI"));
  const std::array<std::size_t, 2> q_pair{0, n};
  Circuit q(n + 1);
  q.append_mapped(f, q_pair);
  q.append(cs);
  q.append_mapped(g, q_pair);

  // A and B act on wire 0 and the first wire of D.
  const Circuit a = transport_pair(pv("XI"), pv("YI"), pv("XI"), pv("YZ"));
  const Circuit b = transport_pair(pv("ZI"), pv("YZ"), pv("XI"), pv("YI"));
  const std::array<std::size_t, 2> ab_pair{0, n + 1};

  Circuit u(2 * n + 1);
  u.add(Gate::h(0)).add(Gate::t(0));
  u.append_mapped(a, ab_pair);
  u.append(tensor_aligned(q, ds, 2 * n + 1, n + 1));
  u.append_mapped(b, ab_pair);
  u.add(Gate::t(0));
  u.add(Gate::s(0)).add(Gate::z(0));
  u.add(Gate::h(0));
  return u;
}

Circuit linear_combination_gadget(const std::vector<Circuit>& circuits, const SymplecticVec& x) {
  if (circuits.empty()) throw std::invalid_argument("linear combination of an empty list");
  const std::size_t n = circuits.front().qubits();
  require_nonzero(x, n);
  std::vector<Circuit> level;
  level.reserve(circuits.size());
  for (const auto& c : circuits) {
    if (c.qubits() != n) throw std::invalid_argument("linear combination needs equal widths");
    level.push_back(c);
  }
  const std::size_t padded = std::size_t{1} << ceil_log2(level.size());
  while (level.size() < padded) level.push_back(zero_coefficient_clifford(n, x));
  if (level.size() == 1) return shift_to_z1(level.front(), x);

  SymplecticVec at = x;
  while (level.size() > 1) {
    std::vector<Circuit> next;
    next.reserve(level.size() / 2);
    for (std::size_t i = 0; i < level.size(); i += 2) next.push_back(average_gadget(level[i], level[i + 1], at));
    level = std::move(next);
    at = SymplecticVec::e_z(level.front().qubits(), 0);
  }
  return std::move(level.front());
}

Circuit power_circuit(std::size_t n, std::size_t k, bool negative) {
  if (n == 0) throw std::invalid_argument("power circuit needs at least one wire");
  if (k > n) throw std::invalid_argument("power circuit needs k <= n");
  Circuit out(n);
  if (k > 0) {
    // r maps Z_1 to X^k: a CNOT fan-in onto wire 0, then H on wires 0..k-1.
    Circuit r(n);
    for (std::size_t q = 1; q < k; ++q) cnot(r, q, 0);
    for (std::size_t q = 0; q < k; ++q) r.add(Gate::h(q));
    out.append(r);
    for (std::size_t q = 0; q < k; ++q) out.add(Gate::t(q));
    out.append(dagger(r));
  }
  if (negative) out.add(Gate::x(0));
  return out;
}

GBCircuit gb_circuit(const GBRoot2Expr& e) {
  if (e.signs.size() != e.mask.size()) throw std::invalid_argument("digit string sign/mask length mismatch");
  const auto digits = e.mask.support();
  if (digits.empty()) return {zero_coefficient_clifford(1, SymplecticVec::e_z(1, 0)), 0};
  std::size_t top = digits.back();
  top += top % 2;
  const std::size_t width = std::max<std::size_t>(top, 1);
  // Digit j becomes +-2^{(j - top)/2}.
  std::vector<Circuit> terms;
  terms.reserve(digits.size());
  for (auto j : digits) terms.push_back(power_circuit(width, top - j, e.signs.get(j)));
  GBCircuit out;
  out.ell = static_cast<std::int64_t>(top / 2 + ceil_log2(terms.size()));
  out.circuit = linear_combination_gadget(terms, SymplecticVec::e_z(width, 0));
  return out;
}

std::size_t mcz_ancillas(std::size_t m) {
  std::size_t values = m + 1;
  std::size_t used = 0;
  while (values > 3) {
    used += values / 2;
    values = values / 2 + values % 2;
  }
  return used;
}

Circuit mcz_log_depth(std::size_t m) {
  if (m == 0) throw std::invalid_argument("MCZ needs at least one control");
  Circuit out(m + 1 + mcz_ancillas(m));
  std::vector<std::size_t> values(m + 1);
  for (std::size_t i = 0; i <= m; ++i) values[i] = i;
  std::size_t next = m + 1;
  std::vector<std::vector<Triple>> levels;
  while (values.size() > 3) {
    std::vector<Triple> level;
    std::vector<std::size_t> carried;
    for (std::size_t i = 0; i + 1 < values.size(); i += 2) {
      level.push_back({values[i], values[i + 1], next});
      carried.push_back(next++);
    }
    if (values.size() % 2) carried.push_back(values.back());
    levels.push_back(std::move(level));
    values = std::move(carried);
  }
  auto toffolis = [&out](const std::vector<Triple>& level) {
    for (const auto& tr : level) out.add(Gate::h(tr[2]));
    append_ccz_parallel(out, level);
    for (const auto& tr : level) out.add(Gate::h(tr[2]));
  };
  for (const auto& level : levels) toffolis(level);
  if (values.size() == 3) {
    append_ccz_parallel(out, {Triple{values[0], values[1], values[2]}});
  } else {
    out.add(Gate::cz(values[0], values[1]));
  }
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) toffolis(*it);
  return out;
}

void append_ccz(Circuit& c, std::size_t a, std::size_t b, std::size_t t) { append_ccz_parallel(c, {Triple{a, b, t}}); }

}  // namespace pconj
