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


#include "pconj/dense.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace pconj {

namespace {

// Applies a gate to the vector v[offset + stride * i], i < 2^n.
void apply_kernel(std::vector<ExactScalar>& v, std::size_t offset, std::size_t stride, std::size_t n,
                  const Gate& g) {
  const std::size_t dim = std::size_t{1} << n;
  auto at = [&](std::size_t i) -> ExactScalar& { return v[offset + stride * i]; };
  if (g.a >= n || (g.two_qubit() && g.b >= n)) throw std::out_of_range("gate wire outside the register");
  const std::size_t mask = std::size_t{1} << (n - 1 - g.a);
  switch (g.kind) {
    case GateKind::H:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask) continue;
        ExactScalar a = at(i);
        ExactScalar b = at(i | mask);
        at(i) = (a + b).scaled(1);
        at(i | mask) = (a - b).scaled(1);
      }
      break;
    case GateKind::X:
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & mask)) std::swap(at(i), at(i | mask));
      }
      break;
    case GateKind::Z:
    case GateKind::S:
    case GateKind::T: {
      const int power = g.kind == GateKind::Z ? 4 : (g.kind == GateKind::S ? 2 : 1);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask) at(i) = at(i).times_omega(power);
      }
      break;
    }
    case GateKind::CZ: {
      const std::size_t mask2 = std::size_t{1} << (n - 1 - g.b);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & mask) && (i & mask2)) at(i) = -at(i);
      }
      break;
    }
  }
}

std::size_t wire_mask(const F2Vec& part, std::size_t n) {
  std::size_t m = 0;
  for (auto q : part.support()) m |= std::size_t{1} << (n - 1 - q);
  return m;
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t qubits)
    : n_(qubits), dim_(std::size_t{1} << qubits), data_(dim_ * dim_) {
  if (qubits > 12) throw std::length_error("dense matrix register too wide");
}

DenseMatrix DenseMatrix::identity(std::size_t qubits) {
  DenseMatrix m(qubits);
  for (std::size_t i = 0; i < m.dim_; ++i) m.at(i, i) = ExactScalar(1);
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix m(n_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) m.at(c, r) = at(r, c).conj();
  }
  return m;
}

DenseMatrix& DenseMatrix::operator*=(const ExactScalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix width mismatch");
  DenseMatrix m(a.n_);
  for (std::size_t r = 0; r < a.dim_; ++r) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const ExactScalar& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < a.dim_; ++c) {
        if (!b.at(k, c).is_zero()) m.at(r, c) += x * b.at(k, c);
      }
    }
  }
  return m;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix width mismatch");
  DenseMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix width mismatch");
  DenseMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

void DenseMatrix::apply_gate(const Gate& g) {
  for (std::size_t c = 0; c < dim_; ++c) apply_kernel(data_, c, dim_, n_, g);
}

DenseMatrix unitary_of(const Circuit& c) {
  DenseMatrix u = DenseMatrix::identity(c.qubits());
  for (const auto& g : c.gates()) u.apply_gate(g);
  return u;
}

DenseMatrix pauli_matrix(const PhasedPauli& p) {
  const std::size_t n = p.n();
  DenseMatrix m(n);
  const std::size_t amask = wire_mask(p.v.z_part(), n);
  const std::size_t bmask = wire_mask(p.v.x_part(), n);
  const int ab = std::popcount(amask & bmask);
  for (std::size_t c = 0; c < m.dim(); ++c) {
    const int sign = std::popcount(amask & c) % 2;
    m.at(c ^ bmask, c) = ExactScalar::omega_power(2 * (p.phase + ab) + 4 * sign);
  }
  return m;
}

ExactScalar hs_inner(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("matrix width mismatch");
  ExactScalar acc;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (!a.at(r, c).is_zero() && !b.at(r, c).is_zero()) acc += a.at(r, c).conj() * b.at(r, c);
    }
  }
  return acc.scaled(2 * static_cast<std::int64_t>(a.qubits()));
}

ExactScalar pauli_coefficient(const DenseMatrix& u, const SymplecticVec& pc) {
  const std::size_t n = u.qubits();
  if (pc.n() != n) throw std::invalid_argument("Pauli width mismatch");
  const std::size_t amask = wire_mask(pc.z_part(), n);
  const std::size_t bmask = wire_mask(pc.x_part(), n);
  ExactScalar acc;
  for (std::size_t c = 0; c < u.dim(); ++c) {
    const ExactScalar& x = u.at(c ^ bmask, c);
    if (x.is_zero()) continue;
    if (std::popcount(amask & c) % 2) {
      acc -= x;
    } else {
      acc += x;
    }
  }
  const int ab = std::popcount(amask & bmask);
  return acc.times_omega(-2 * ab).scaled(2 * static_cast<std::int64_t>(n));
}

SymplecticVec pauli_from_index(std::size_t n, std::size_t index) {
  F2Vec bits(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) bits.set(k, (index >> k) & 1U);
  return SymplecticVec::from_bits(std::move(bits));
}

std::vector<ExactScalar> pauli_expansion(const DenseMatrix& u) {
  const std::size_t n = u.qubits();
  std::vector<ExactScalar> out;
  out.reserve(std::size_t{1} << (2 * n));
  for (std::size_t i = 0; i < (std::size_t{1} << (2 * n)); ++i) {
    out.push_back(pauli_coefficient(u, pauli_from_index(n, i)));
  }
  return out;
}

bool equal_up_to_phase(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.qubits() != b.qubits()) return false;
  std::size_t pr = 0;
  std::size_t pc = 0;
  bool found = false;
  for (std::size_t r = 0; r < a.dim() && !found; ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (!b.at(r, c).is_zero()) {
        pr = r;
        pc = c;
        found = true;
        break;
      }
    }
  }
  if (!found) return a == b;
  const ExactScalar& bp = b.at(pr, pc);
  const ExactScalar& ap = a.at(pr, pc);
  if (ap.is_zero()) return false;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (a.at(r, c) * bp != ap * b.at(r, c)) return false;
    }
  }
  return ap.norm() == bp.norm();
}

bool is_scalar_identity(const DenseMatrix& u) {
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) {
      if (r == c) {
        if (u.at(r, c) != u.at(0, 0)) return false;
      } else if (!u.at(r, c).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

StateVector::StateVector(std::size_t qubits, std::uint64_t basis_index)
    : n_(qubits), amp_(std::size_t{1} << qubits) {
  if (qubits > 26) throw std::length_error("state vector register too wide");
  amp_.at(basis_index) = ExactScalar(1);
}

StateVector::StateVector(std::vector<ExactScalar> amplitudes) : n_(0), amp_(std::move(amplitudes)) {
  if (amp_.empty() || (amp_.size() & (amp_.size() - 1)) != 0) {
    throw std::invalid_argument("state vector length must be a power of two");
  }
  while ((std::size_t{1} << n_) < amp_.size()) ++n_;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b) {
  if (a.qubits() != b.qubits()) return false;
  const auto& x = a.amplitudes();
  const auto& y = b.amplitudes();
  std::size_t p = 0;
  while (p < y.size() && y[p].is_zero()) ++p;
  if (p == y.size()) return a == b;
  if (x[p].is_zero() || x[p].norm() != y[p].norm()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] * y[p] != x[p] * y[i]) return false;
  }
  return true;
}

void StateVector::apply_gate(const Gate& g) { apply_kernel(amp_, 0, 1, n_, g); }

void StateVector::apply(const Circuit& c) {
  if (c.qubits() > n_) throw std::invalid_argument("circuit wider than state");
  for (const auto& g : c.gates()) apply_gate(g);
}

}  // namespace pconj
