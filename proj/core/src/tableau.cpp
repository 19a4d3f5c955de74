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


#include "pconj/tableau.hpp"

#include <stdexcept>

namespace pconj {

CliffordTableau::CliffordTableau(std::size_t n) {
  z_.reserve(n);
  x_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    z_.emplace_back(SymplecticVec::e_z(n, j));
    x_.emplace_back(SymplecticVec::e_x(n, j));
  }
}

CliffordTableau::CliffordTableau(std::vector<PhasedPauli> z_images, std::vector<PhasedPauli> x_images)
    : z_(std::move(z_images)), x_(std::move(x_images)) {
  if (z_.size() != x_.size()) throw std::invalid_argument("tableau needs as many X images as Z images");
  for (std::size_t j = 0; j < z_.size(); ++j) {
    if (z_[j].n() != z_.size() || x_[j].n() != z_.size()) throw std::invalid_argument("tableau image width mismatch");
  }
}

PhasedPauli CliffordTableau::apply(const PhasedPauli& p) const {
  const std::size_t n = qubits();
  if (p.n() != n) throw std::invalid_argument("tableau and Pauli widths differ");
  std::size_t both = 0;
  for (std::size_t j = 0; j < n; ++j) both += p.v.z(j) && p.v.x(j);
  PhasedPauli acc(SymplecticVec(n), p.phase + static_cast<int>(both % 4));
  for (std::size_t j = 0; j < n; ++j) {
    if (p.v.x(j)) acc = acc * x_[j];
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (p.v.z(j)) acc = acc * z_[j];
  }
  return acc;
}

void CliffordTableau::append_gate(const Gate& g) {
  for (auto& p : z_) conjugate_in_place(p, g);
  for (auto& p : x_) conjugate_in_place(p, g);
}

bool CliffordTableau::is_identity() const { return *this == CliffordTableau(qubits()); }

bool CliffordTableau::is_symplectic() const {
  const std::size_t n = qubits();
  for (std::size_t i = 0; i < n; ++i) {
    if (!z_[i].hermitian() || !x_[i].hermitian()) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (symplectic_form(z_[i].v, z_[j].v) || symplectic_form(x_[i].v, x_[j].v)) return false;
      if (symplectic_form(z_[i].v, x_[j].v) != (i == j)) return false;
    }
  }
  return true;
}

CliffordTableau tableau_from_circuit(const Circuit& c) {
  CliffordTableau t(c.qubits());
  for (const auto& g : c.gates()) {
    if (g.is_t()) throw std::invalid_argument("tableau_from_circuit: circuit contains a T gate");
    t.append_gate(g);
  }
  return t;
}

CliffordTableau compose(const CliffordTableau& outer, const CliffordTableau& inner) {
  if (outer.qubits() != inner.qubits()) throw std::invalid_argument("compose: width mismatch");
  std::vector<PhasedPauli> z;
  std::vector<PhasedPauli> x;
  for (std::size_t j = 0; j < inner.qubits(); ++j) {
    z.push_back(outer.apply(inner.z_image(j)));
    x.push_back(outer.apply(inner.x_image(j)));
  }
  return CliffordTableau(std::move(z), std::move(x));
}

PhasedPauli conjugate_pauli(const CliffordTableau& c, const PhasedPauli& p) {
  if (!p.hermitian()) throw std::invalid_argument("conjugate_pauli: input is not Hermitian");
  return c.apply(p);
}

}  // namespace pconj
