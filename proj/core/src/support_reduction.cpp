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


#include "pconj/support_reduction.hpp"

#include <stdexcept>

#include "pconj/gadgets.hpp"
#include "pconj/presentation.hpp"
#include "pconj/synthesis.hpp"

namespace pconj {

namespace {

void sqrt_x(Circuit& c, std::size_t q) {
  c.add(Gate::h(q)).add(Gate::s(q)).add(Gate::h(q));
}

}  // namespace

Circuit pauli_circuit(const SymplecticVec& x) {
  Circuit c(x.n());
  for (std::size_t q = 0; q < x.n(); ++q) {
    if (x.z(q)) c.add(Gate::z(q));
    if (x.x(q)) c.add(Gate::x(q));
  }
  return c;
}

std::size_t support_to_enic_depth_bound(std::size_t depth, std::size_t n) {
  const std::size_t m = 2 * n;
  std::size_t levels = 0;
  for (std::size_t v = m + 1; v > 3; v = v / 2 + v % 2) ++levels;
  const std::size_t mcz = m == 1 ? 0 : 6 * levels + 3;
  return 2 * depth + mcz;
}

SupportReduction support_to_enic(const Circuit& c, const SymplecticVec& z) {
  const std::size_t n = c.qubits();
  if (z.n() != n) throw std::invalid_argument("Pauli width does not match the circuit");
  if (z.is_zero()) throw std::invalid_argument("support query needs a nonzero Pauli");

  SymplecticVec all_x(n);
  for (std::size_t q = 0; q < n; ++q) all_x.set_x(q);
  const Circuit r = transport_pauli(PhasedPauli(z), PhasedPauli(all_x)).widened(n);

  SupportReduction out;
  out.data = n;
  out.conjugated = Circuit(n);
  out.conjugated.append(dagger(r));
  out.conjugated.append(c);
  out.conjugated.append(r);

  // W: CZ(i, n+i), sqrt X on data, CZ(i, 2n+i), H on the ancillas.
  Circuit w(3 * n);
  for (std::size_t i = 0; i < n; ++i) w.add(Gate::cz(i, n + i));
  for (std::size_t i = 0; i < n; ++i) sqrt_x(w, i);
  for (std::size_t i = 0; i < n; ++i) w.add(Gate::cz(i, 2 * n + i));
  for (std::size_t i = n; i < 3 * n; ++i) w.add(Gate::h(i));

  out.entangled = Circuit(3 * n);
  out.entangled.append(dagger(w));
  out.entangled.append(out.conjugated);
  out.entangled.append(w);

  const Circuit mcz = mcz_log_depth(2 * n);
  const std::size_t width = 3 * n + mcz_ancillas(2 * n);
  out.ancillas = width - n;
  std::vector<std::size_t> wires;
  for (std::size_t i = n; i < 3 * n; ++i) wires.push_back(i);
  wires.push_back(0);
  for (std::size_t i = 3 * n; i < width; ++i) wires.push_back(i);

  out.circuit = Circuit(width);
  out.circuit.append(out.entangled);
  out.circuit.append_mapped(mcz, wires);
  out.circuit.append(dagger(out.entangled));
  return out;
}

std::vector<std::pair<Circuit, SymplecticVec>> enic_to_commute(const Circuit& d) {
  const std::size_t n = d.qubits();
  std::vector<std::pair<Circuit, SymplecticVec>> out;
  out.reserve(2 * n);
  for (std::size_t j = 0; j < n; ++j) out.emplace_back(d, SymplecticVec::e_z(n, j));
  for (std::size_t j = 0; j < n; ++j) out.emplace_back(d, SymplecticVec::e_x(n, j));
  return out;
}

CommuteToEnic commute_to_enic(const Circuit& c, const SymplecticVec& x) {
  const Circuit s = shift_to_z1(c, x);
  const Circuit sd = dagger(s);
  const std::size_t n = c.qubits();
  CommuteToEnic out{Circuit(n), Circuit(n)};
  out.u.add(Gate::z(0)).append(sd).add(Gate::z(0)).append(s);
  out.v.add(Gate::s(0)).append(sd).add(Gate::s(0)).append(s);
  return out;
}

Circuit teleport_correction(const Circuit& f, const SymplecticVec& x) {
  if (t_depth(f) > 1) throw std::invalid_argument("teleport correction needs T-depth at most 1");
  const std::size_t n = f.qubits();
  if (x.is_zero()) return canonical_clifford(Circuit(n));
  // Depth one: F P^x F^dagger = prod (I + i s P^{x_s}) / sqrt2 * tail, and
  // each factor is a Clifford pi/4 rotation.
  const auto form = product_form(encode(f, x));
  Circuit g = pauli_circuit(form.tail.v);
  for (auto it = form.factors.rbegin(); it != form.factors.rend(); ++it) {
    const auto& sub = it->sub;
    const Circuit r = transport_pauli(PhasedPauli(sub.outer()), PhasedPauli(SymplecticVec::e_z(n, 0))).widened(n);
    g.append(r);
    // exp(i pi/4 Z) is S^dagger up to phase, exp(-i pi/4 Z) is S.
    g.add(Gate::s(0));
    if (!sub.tau()) g.add(Gate::z(0));
    g.append(dagger(r));
  }
  return canonical_clifford(g);
}

bool teleport_check(const Circuit& f, const SymplecticVec& x, const StateVector& psi) {
  StateVector lhs = psi;
  lhs.apply(pauli_circuit(x));
  lhs.apply(f);
  lhs.apply(teleport_correction(f, x));
  StateVector rhs = psi;
  rhs.apply(f);
  return equal_up_to_phase(lhs, rhs);
}

}  // namespace pconj
