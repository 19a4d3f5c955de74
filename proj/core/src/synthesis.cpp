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


#include "pconj/synthesis.hpp"

#include <algorithm>
#include <stdexcept>

namespace pconj {

namespace {

// Applies gates to a set of tracked Paulis while recording them. Reduction
// routines drive the tracked Paulis to standard generators; the recorded
// circuit D then satisfies D p D^dagger = standard.
class Reducer {
 public:
  Reducer(std::size_t n, std::vector<PhasedPauli> tracked) : tracked_(std::move(tracked)), recorded_(n) {}

  void apply(const Gate& g) {
    for (auto& p : tracked_) conjugate_in_place(p, g);
    recorded_.add(g);
  }
  void cnot(std::size_t control, std::size_t target) {
    apply(Gate::h(target));
    apply(Gate::cz(control, target));
    apply(Gate::h(target));
  }

  // Turns every wire >= from of tracked[idx] into a single letter: Z if
  // to_z, X otherwise.
  void diagonalize_tail(std::size_t idx, std::size_t from, bool to_z) {
    const std::size_t n = recorded_.qubits();
    for (std::size_t k = from; k < n; ++k) {
      const bool a = tracked_[idx].v.z(k);
      const bool b = tracked_[idx].v.x(k);
      if (!a && !b) continue;
      if (to_z) {
        if (a && b) apply(Gate::s(k));
        if (b) apply(Gate::h(k));
      } else {
        if (a && b) {
          apply(Gate::s(k));
        } else if (a) {
          apply(Gate::h(k));
        }
      }
    }
  }

  std::vector<std::size_t> tail_support(std::size_t idx, std::size_t from) const {
    std::vector<std::size_t> out;
    for (std::size_t k = from; k < recorded_.qubits(); ++k) {
      if (tracked_[idx].v.z(k) || tracked_[idx].v.x(k)) out.push_back(k);
    }
    return out;
  }

  // Drives tracked[xi] to +X_j and tracked[zi] to +Z_j. Both must be
  // supported on wires >= j and anticommute.
  void reduce_pair(std::size_t j, std::size_t xi, std::size_t zi) {
    diagonalize_tail(xi, j, false);
    auto sup = tail_support(xi, j);
    if (sup.empty()) throw std::invalid_argument("reduce_pair: X image is trivial");
    const std::size_t j0 = sup.front();
    for (std::size_t i = 1; i < sup.size(); ++i) cnot(j0, sup[i]);
    if (j0 != j) {
      cnot(j0, j);
      cnot(j, j0);
    }
    // Z image: clear wires other than j, then fix wire j.
    for (std::size_t k = j + 1; k < recorded_.qubits(); ++k) {
      const bool a = tracked_[zi].v.z(k);
      const bool b = tracked_[zi].v.x(k);
      if (!a && !b) continue;
      if (a && b) apply(Gate::s(k));
      if (b) apply(Gate::h(k));
      cnot(k, j);
    }
    if (tracked_[zi].v.x(j)) {
      apply(Gate::h(j));
      apply(Gate::s(j));
      apply(Gate::h(j));
    }
    if (tracked_[xi].negative()) apply(Gate::z(j));
    if (tracked_[zi].negative()) apply(Gate::x(j));
    if (tracked_[xi] != PhasedPauli(SymplecticVec::e_x(recorded_.qubits(), j)) ||
        tracked_[zi] != PhasedPauli(SymplecticVec::e_z(recorded_.qubits(), j))) {
      throw std::invalid_argument("reduce_pair: images do not form a symplectic pair");
    }
  }

  // Drives tracked[idx] to +Z_j, assuming wires < j carry only Z letters.
  void reduce_z(std::size_t j, std::size_t idx) {
    const std::size_t n = recorded_.qubits();
    diagonalize_tail(idx, j, true);
    auto sup = tail_support(idx, j);
    if (sup.empty()) throw std::invalid_argument("synthesize_from_images: images are linearly dependent");
    const std::size_t j0 = sup.front();
    for (std::size_t i = 1; i < sup.size(); ++i) cnot(sup[i], j0);
    if (j0 != j) {
      cnot(j, j0);
      cnot(j0, j);
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (tracked_[idx].v.x(i)) throw std::invalid_argument("synthesize_from_images: images do not commute");
      if (tracked_[idx].v.z(i)) cnot(i, j);
    }
    if (tracked_[idx].negative()) apply(Gate::x(j));
    if (tracked_[idx] != PhasedPauli(SymplecticVec::e_z(n, j))) {
      throw std::invalid_argument("synthesize_from_images: reduction failed");
    }
  }

  const Circuit& recorded() const noexcept { return recorded_; }

 private:
  std::vector<PhasedPauli> tracked_;
  Circuit recorded_;
};

SymplecticVec restrict_to(const SymplecticVec& v, const std::vector<std::size_t>& wires) {
  SymplecticVec r(wires.size());
  for (std::size_t i = 0; i < wires.size(); ++i) {
    r.set_z(i, v.z(wires[i]));
    r.set_x(i, v.x(wires[i]));
  }
  return r;
}

}  // namespace

Circuit synthesize_tableau(const CliffordTableau& t) {
  const std::size_t n = t.qubits();
  if (!t.is_symplectic()) throw std::invalid_argument("synthesize_tableau: not a Clifford tableau");
  std::vector<PhasedPauli> tracked;
  for (std::size_t j = 0; j < n; ++j) tracked.push_back(t.z_image(j));
  for (std::size_t j = 0; j < n; ++j) tracked.push_back(t.x_image(j));
  Reducer r(n, std::move(tracked));
  for (std::size_t j = 0; j < n; ++j) r.reduce_pair(j, n + j, j);
  return dagger(r.recorded());
}

Circuit canonical_clifford(const Circuit& c) { return synthesize_tableau(tableau_from_circuit(c)); }

Circuit synthesize_from_images(std::size_t n, const std::vector<std::pair<SymplecticVec, bool>>& images) {
  std::vector<SymplecticVec> vecs;
  std::vector<PhasedPauli> tracked;
  for (const auto& [v, sign] : images) {
    if (v.n() != n) throw std::invalid_argument("synthesize_from_images: width mismatch");
    vecs.push_back(v);
    tracked.push_back(PhasedPauli::signed_pauli(v, sign));
  }
  if (images.size() > n) throw std::invalid_argument("synthesize_from_images: too many images");
  OrderedBasis basis(n, vecs);
  if (!basis.isotropic()) throw std::invalid_argument("synthesize_from_images: images do not commute");
  Reducer r(n, std::move(tracked));
  for (std::size_t j = 0; j < images.size(); ++j) r.reduce_z(j, j);
  return dagger(r.recorded());
}

Circuit transport_pair(const SymplecticVec& x0, const SymplecticVec& y0, const SymplecticVec& x1,
                       const SymplecticVec& y1) {
  const std::size_t n = x0.n();
  if (!symplectic_form(x0, y0) || !symplectic_form(x1, y1)) {
    throw std::invalid_argument("transport_pair: each pair must anticommute");
  }
  Reducer r0(n, {PhasedPauli(x0), PhasedPauli(y0)});
  r0.reduce_pair(0, 1, 0);
  Reducer r1(n, {PhasedPauli(x1), PhasedPauli(y1)});
  r1.reduce_pair(0, 1, 0);
  Circuit out = r0.recorded();
  out.append(dagger(r1.recorded()));
  return out;
}

Circuit transport_pauli(const PhasedPauli& p, const PhasedPauli& q) {
  if (p.n() != q.n()) throw std::invalid_argument("transport_pauli: width mismatch");
  if (!p.hermitian() || !q.hermitian()) throw std::invalid_argument("transport_pauli: Paulis must be Hermitian");
  if (p.v.is_zero() || q.v.is_zero()) throw std::invalid_argument("transport_pauli: Paulis must be nontrivial");
  auto wires = p.v.wires();
  for (auto w : q.v.wires()) wires.push_back(w);
  std::sort(wires.begin(), wires.end());
  wires.erase(std::unique(wires.begin(), wires.end()), wires.end());
  const std::size_t m = wires.size();
  Reducer rp(m, {PhasedPauli(restrict_to(p.v, wires), p.phase)});
  rp.reduce_z(0, 0);
  Reducer rq(m, {PhasedPauli(restrict_to(q.v, wires), q.phase)});
  rq.reduce_z(0, 0);
  Circuit local = rp.recorded();
  local.append(dagger(rq.recorded()));
  Circuit out(p.n());
  out.append_mapped(local, wires);
  return out;
}

Circuit clifford_shift(const Circuit& a, const SymplecticVec& x, const SymplecticVec& y, const SymplecticVec& x_new,
                       const SymplecticVec& y_new) {
  const std::size_t n = a.qubits();
  if (x.n() != n || y.n() != n || x_new.n() != n || y_new.n() != n) {
    throw std::invalid_argument("clifford_shift: width mismatch");
  }
  if (x.is_zero() != x_new.is_zero()) throw std::invalid_argument("clifford_shift: x and x' must both be zero or both nonzero");
  if (y.is_zero() != y_new.is_zero()) throw std::invalid_argument("clifford_shift: y and y' must both be zero or both nonzero");
  Circuit out(n);
  if (!x.is_zero()) out.append(transport_pauli(PhasedPauli(x_new), PhasedPauli(x)));
  out.append(a);
  if (!y.is_zero()) out.append(transport_pauli(PhasedPauli(y), PhasedPauli(y_new)));
  return out;
}

}  // namespace pconj
