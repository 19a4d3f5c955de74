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


#include "pconj/pauli.hpp"

#include <stdexcept>

namespace pconj {

namespace {

int mod4(long k) { return static_cast<int>(((k % 4) + 4) % 4); }

void check_wire(const PhasedPauli& p, std::size_t q) {
  if (q >= p.n()) throw std::out_of_range("gate wire outside the Pauli's register");
}

}  // namespace

std::string PhasedPauli::to_string() const {
  static constexpr const char* kPrefix[4] = {"+", "i", "-", "-i"};
  std::string s = kPrefix[phase];
  for (std::size_t j = 0; j < v.n(); ++j) {
    const bool a = v.z(j);
    const bool b = v.x(j);
    s += a ? (b ? 'Y' : 'Z') : (b ? 'X' : 'I');
  }
  return s;
}

PhasedPauli PhasedPauli::parse(std::string_view text) {
  int phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase += 1;
    text.remove_prefix(1);
  }
  if (text.find('|') != std::string_view::npos) {
    return PhasedPauli(SymplecticVec::from_string(text), phase);
  }
  SymplecticVec v(text.size());
  for (std::size_t j = 0; j < text.size(); ++j) {
    switch (text[j]) {
      case 'I':
      case '_':
        break;
      case 'X':
        v.set_x(j);
        break;
      case 'Z':
        v.set_z(j);
        break;
      case 'Y':
        v.set_x(j);
        v.set_z(j);
        break;
      default:
        throw std::invalid_argument("unrecognized Pauli letter in '" + std::string(text) + "'");
    }
  }
  return PhasedPauli(std::move(v), phase);
}

PhasedPauli operator*(const PhasedPauli& p, const PhasedPauli& q) {
  return PhasedPauli(p.v ^ q.v, p.phase + q.phase + product_phase(p.v, q.v));
}

long bracket(const SymplecticVec& u, const SymplecticVec& v) {
  if (u.n() != v.n()) throw std::invalid_argument("bracket: dimension mismatch");
  long acc = 0;
  for (std::size_t j = 0; j < u.n(); ++j) {
    acc += static_cast<long>(u.z(j) && v.x(j)) - static_cast<long>(v.z(j) && u.x(j));
  }
  return acc;
}

int product_phase(const SymplecticVec& u, const SymplecticVec& v) {
  if (u.n() != v.n()) throw std::invalid_argument("product_phase: dimension mismatch");
  // Per wire: i^{ab} X^b Z^a i^{a'b'} X^b' Z^a' = i^{ab + a'b' + 2ab'} X^{b+b'} Z^{a+a'}.
  long acc = 0;
  for (std::size_t j = 0; j < u.n(); ++j) {
    const int a = u.z(j);
    const int b = u.x(j);
    const int a2 = v.z(j);
    const int b2 = v.x(j);
    acc += a * b + a2 * b2 + 2 * a * b2 - (a ^ a2) * (b ^ b2);
  }
  return mod4(acc);
}

bool theta_coords(const OrderedBasis& x, const F2Vec& coords) {
  if (coords.size() != x.dim()) throw std::invalid_argument("theta: coordinate length mismatch");
  PhasedPauli acc = PhasedPauli::identity(x.n());
  for (auto i : coords.support()) acc = acc * PhasedPauli(x[i]);
  if (!acc.hermitian()) throw std::invalid_argument("theta: basis is not isotropic");
  return acc.negative();
}

bool theta(const OrderedBasis& x, const SymplecticVec& v) {
  auto coords = x.expand(v);
  if (!coords) throw std::invalid_argument("theta: vector outside the span");
  return theta_coords(x, *coords);
}

void conjugate_in_place(PhasedPauli& p, const Gate& g) {
  check_wire(p, g.a);
  const std::size_t q = g.a;
  const bool a = p.v.z(q);
  const bool b = p.v.x(q);
  bool flip = false;
  switch (g.kind) {
    case GateKind::H:
      p.v.set_z(q, b);
      p.v.set_x(q, a);
      flip = a && b;
      break;
    case GateKind::S:
      p.v.set_z(q, a != b);
      flip = a && b;
      break;
    case GateKind::Z:
      flip = b;
      break;
    case GateKind::X:
      flip = a;
      break;
    case GateKind::CZ: {
      check_wire(p, g.b);
      if (g.a == g.b) throw std::invalid_argument("CZ needs two distinct wires");
      const bool a2 = p.v.z(g.b);
      const bool b2 = p.v.x(g.b);
      flip = b && b2 && (a != a2);
      p.v.set_z(q, a != b2);
      p.v.set_z(g.b, a2 != b);
      break;
    }
    case GateKind::T:
      throw std::invalid_argument("update_by_gate: T is not a Clifford gate");
  }
  if (flip) p.phase = (p.phase + 2) % 4;
}

PhasedPauli update_by_gate(const PhasedPauli& p, const Gate& g) {
  PhasedPauli r = p;
  conjugate_in_place(r, g);
  return r;
}

}  // namespace pconj
