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


#include "pconj/branching.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace pconj {

Branching::Branching(std::size_t ambient, std::vector<BranchingLevel> levels) : m_(ambient), levels_(std::move(levels)) {
  for (const auto& l : levels_) {
    if (l.map.rows() != l.basis.size() || (l.map.rows() > 0 && l.map.cols() != m_)) {
      throw std::invalid_argument("branching: map shape does not match the basis");
    }
    for (const auto& b : l.basis) {
      if (b.size() != m_) throw std::invalid_argument("branching: basis vector length mismatch");
      if (!l.map.apply(b).is_zero()) throw std::invalid_argument("branching: basis is not inside the kernel of its map");
    }
    if (rank_of(l.basis, m_) != l.basis.size()) throw std::invalid_argument("branching: basis is dependent");
  }
}

std::size_t Branching::spread_width(std::size_t j, const F2Vec& y) const {
  const auto& l = level(j);
  return l.basis.empty() ? 0 : l.map.apply(y).popcount();
}

AffineSpace Branching::spread(std::size_t j, const F2Vec& y) const {
  const auto& l = level(j);
  std::vector<F2Vec> gens;
  if (!l.basis.empty()) {
    const F2Vec sel = l.map.apply(y);
    for (auto i : sel.support()) gens.push_back(l.basis[i]);
  }
  return AffineSpace(y, gens);
}

namespace {

void check_point(const Branching& a, const F2Vec& v) {
  if (v.size() != a.ambient()) throw std::invalid_argument("branching: point length mismatch");
}

ExactScalar count_scaled(std::size_t dim, std::size_t half_exponent) {
  return ExactScalar(BigInt(1) << dim, 0, 0, 0, static_cast<std::int64_t>(half_exponent));
}

}  // namespace

ExactScalar branching_coefficient(const Branching& a, const F2Vec& y, const F2Vec& q, const CoefficientOptions& opts) {
  check_point(a, y);
  check_point(a, q);
  std::map<std::uint64_t, std::int64_t> tally;
  std::uint64_t visited = 0;
  std::function<void(std::size_t, const F2Vec&, std::uint64_t)> rec = [&](std::size_t j, const F2Vec& z,
                                                                          std::uint64_t e) {
    if (++visited > opts.node_budget) throw BudgetExceeded("branching expansion exceeded the node budget");
    if (j > a.depth()) {
      if (z == q) ++tally[e];
      return;
    }
    const auto s = a.spread(j, z);
    const std::uint64_t w = a.spread_width(j, z);
    s.for_each_point([&](const F2Vec& next) { rec(j + 1, next, e + w); });
  };
  rec(1, y, 0);
  ExactScalar sum;
  for (const auto& [e, c] : tally) sum = sum + ExactScalar(c) * ExactScalar::inv_sqrt2_power(static_cast<std::int64_t>(e));
  return sum;
}

ExactScalar branching_coeff_d2(const Branching& a, const F2Vec& y, const F2Vec& q) {
  if (a.depth() != 2) throw std::invalid_argument("branching_coeff_d2: depth must be 2");
  check_point(a, y);
  check_point(a, q);
  const auto meet = affine_intersect(a.spread(1, y), a.spread(2, q));
  if (!meet) return ExactScalar();
  return count_scaled(meet->dim(), a.spread_width(1, y) + a.spread_width(2, q));
}

namespace {

bool spans_meet_trivially(const std::vector<F2Vec>& u, const std::vector<F2Vec>& v, std::size_t m) {
  std::vector<F2Vec> all(u);
  all.insert(all.end(), v.begin(), v.end());
  return rank_of(all, m) == rank_of(u, m) + rank_of(v, m);
}

bool affine_subset(const AffineSpace& small, const AffineSpace& big) {
  if (!big.contains(small.offset())) return false;
  for (const auto& b : small.basis()) {
    if (!big.contains(big.offset() ^ b)) return false;
  }
  return true;
}

}  // namespace

bool d3_closed_form_applies(const Branching& a, const F2Vec& y, const F2Vec& q) {
  if (a.depth() != 3) return false;
  return spans_meet_trivially(a.level(2).basis, a.level(3).basis, a.ambient()) &&
         affine_subset(a.spread(1, y), a.spread(3, q));
}

ExactScalar branching_coeff_d3(const Branching& a, const F2Vec& y, const F2Vec& q, const CoefficientOptions& opts) {
  if (a.depth() != 3) throw std::invalid_argument("branching_coeff_d3: depth must be 3");
  check_point(a, y);
  check_point(a, q);
  const AffineSpace m = a.spread(1, y);
  const AffineSpace n = a.spread(3, q);
  if (m.dim() >= 63 || (std::uint64_t{1} << m.dim()) > opts.node_budget) {
    throw BudgetExceeded("branching_coeff_d3: first spread too large");
  }
  const bool closed = d3_closed_form_applies(a, y, q);
  std::map<std::uint64_t, BigInt> tally;
  m.for_each_point([&](const F2Vec& z) {
    const std::uint64_t w = a.spread_width(2, z);
    if (closed) {
      tally[w] += 1;
      return;
    }
    const auto meet = affine_intersect(a.spread(2, z), n);
    if (meet) tally[w] += BigInt(1) << meet->dim();
  });
  ExactScalar sum;
  for (const auto& [w, c] : tally) sum = sum + ExactScalar(c, 0, 0, 0, static_cast<std::int64_t>(w));
  return sum * ExactScalar::inv_sqrt2_power(static_cast<std::int64_t>(m.dim() + n.dim()));
}

Branching branching_of(const Presentation& p) {
  const std::size_t n = p.qubits();
  std::vector<BranchingLevel> levels;
  for (const auto& l : p.layers()) {
    BranchingLevel lv;
    lv.map = F2Matrix(0, 2 * n);
    for (std::size_t i = 0; i < l.basis.dim(); ++i) {
      const auto& x = l.basis[i];
      lv.basis.push_back(x.bits());
      // B(x, v) = x_Z . v_X + x_X . v_Z, i.e. a dot product with x's halves swapped.
      lv.map.push_back(F2Vec::concat(x.x_part(), x.z_part()));
    }
    levels.push_back(std::move(lv));
  }
  // Presentation layers are isotropic and independent, so the checks hold.
  return Branching(2 * n, std::move(levels), Branching::Unchecked{});
}

Branching presentation_to_branching(const Presentation& p, const CoefficientOptions& opts) {
  if (!sign_is_zero(p, opts)) throw std::invalid_argument("presentation_to_branching: some chain has sign 1");
  return branching_of(p);
}

}  // namespace pconj
