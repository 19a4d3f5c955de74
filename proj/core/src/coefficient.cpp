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


#include "pconj/coefficient.hpp"

#include <map>

#include "pconj/pauli.hpp"

namespace pconj {

bool step_sign(const PresentationLayer& layer, const SymplecticVec& y, const F2Vec& coords) {
  const SymplecticVec delta = layer.basis.combine(coords);
  const int twice = static_cast<int>(coords.popcount()) + product_phase(delta, y);
  if (twice % 2 != 0) throw std::logic_error("step_sign: odd phase exponent");
  return layer.sign_of(coords) ^ theta_coords(layer.basis, coords) ^ (((twice / 2) & 1) != 0);
}

namespace {

// Subset `mask` of the positions listed in `idx`, as coordinates of length r.
F2Vec subset_coords(const std::vector<std::size_t>& idx, std::uint64_t mask, std::size_t r) {
  F2Vec c(r);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if ((mask >> k) & 1U) c.set(idx[k]);
  }
  return c;
}

bool inside(const F2Vec& coords, const F2Vec& allowed) { return (coords & allowed) == coords; }

class ChainWalker {
 public:
  ChainWalker(const Presentation& p, const CoefficientOptions& opts) : p_(p), budget_(opts.node_budget) {}

  void tick() {
    if (++visited_ > budget_) throw BudgetExceeded("chain enumeration exceeded the node budget");
  }

  // Calls fn(next_y, sign, width) for every step out of y through layer j (1-based).
  template <class Fn>
  void steps(std::size_t j, const SymplecticVec& y, Fn&& fn) {
    const auto& layer = p_.layer(j);
    const F2Vec anti = anticommutation_map(layer.basis, y);
    const auto idx = anti.support();
    if (idx.size() >= 63) throw BudgetExceeded("layer step too wide to enumerate");
    const std::uint64_t count = std::uint64_t{1} << idx.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      tick();
      const F2Vec coords = subset_coords(idx, mask, layer.basis.dim());
      fn(y ^ layer.basis.combine(coords), step_sign(layer, y, coords), idx.size());
    }
  }

 private:
  const Presentation& p_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
};

using Tally = std::map<std::uint64_t, std::int64_t>;

ExactScalar total(const Tally& tally) {
  ExactScalar sum;
  for (const auto& [e, c] : tally) {
    if (c != 0) sum = sum + ExactScalar(c) * ExactScalar::inv_sqrt2_power(static_cast<std::int64_t>(e));
  }
  return sum;
}

// Last step, where the endpoint is fixed: a single membership test.
void final_step(const PresentationLayer& layer, const SymplecticVec& y, const SymplecticVec& z, bool sign,
                std::uint64_t exponent, Tally& tally) {
  const F2Vec anti = anticommutation_map(layer.basis, y);
  const auto coords = layer.basis.expand(z ^ y);
  if (!coords || !inside(*coords, anti)) return;
  const bool s = sign ^ step_sign(layer, y, *coords);
  tally[exponent + anti.popcount()] += s ? -1 : 1;
}

}  // namespace

bool chain_sign(const Presentation& p, const std::vector<SymplecticVec>& chain) {
  if (chain.size() != p.depth()) throw std::invalid_argument("chain_sign: chain length must equal the depth");
  bool sign = p.tau();
  SymplecticVec y = p.outer();
  for (std::size_t j = 1; j <= p.depth(); ++j) {
    const auto& layer = p.layer(j);
    const auto coords = layer.basis.expand(chain[j - 1] ^ y);
    if (!coords || !inside(*coords, anticommutation_map(layer.basis, y))) {
      throw std::invalid_argument("chain_sign: chain is not admissible");
    }
    sign ^= step_sign(layer, y, *coords);
    y = chain[j - 1];
  }
  return sign;
}

void for_each_chain(const Presentation& p, const std::function<void(const Chain&)>& fn,
                    const CoefficientOptions& opts) {
  ChainWalker walker(p, opts);
  Chain cur;
  cur.sign = p.tau();
  std::function<void(std::size_t, const SymplecticVec&)> rec = [&](std::size_t j, const SymplecticVec& y) {
    if (j > p.depth()) {
      fn(cur);
      return;
    }
    walker.steps(j, y, [&](const SymplecticVec& next, bool s, std::size_t width) {
      cur.steps.push_back(next);
      cur.sign ^= s;
      cur.exponent += width;
      rec(j + 1, next);
      cur.exponent -= width;
      cur.sign ^= s;
      cur.steps.pop_back();
    });
  };
  rec(1, p.outer());
}

ExactScalar coefficient_depth1_fast(const Presentation& p, const SymplecticVec& z) {
  if (p.depth() > 1) throw std::invalid_argument("coefficient_depth1_fast: depth must be at most 1");
  if (p.depth() == 0) {
    if (z != p.outer()) return ExactScalar();
    return ExactScalar(p.tau() ? -1 : 1);
  }
  Tally tally;
  final_step(p.layer(1), p.outer(), z, p.tau(), 0, tally);
  return total(tally);
}

ExactScalar coefficient(const Presentation& p, const SymplecticVec& z, const CoefficientOptions& opts) {
  if (z.n() != p.qubits()) throw std::invalid_argument("coefficient: Pauli width mismatch");
  if (p.depth() <= 1) return coefficient_depth1_fast(p, z);
  ChainWalker walker(p, opts);
  Tally tally;
  const std::size_t d = p.depth();
  std::function<void(std::size_t, const SymplecticVec&, bool, std::uint64_t)> rec =
      [&](std::size_t j, const SymplecticVec& y, bool sign, std::uint64_t e) {
        if (j == d) {
          walker.tick();
          final_step(p.layer(d), y, z, sign, e, tally);
          return;
        }
        walker.steps(j, y, [&](const SymplecticVec& next, bool s, std::size_t width) {
          rec(j + 1, next, sign ^ s, e + width);
        });
      };
  rec(1, p.outer(), p.tau(), 0);
  return total(tally);
}

std::vector<std::pair<SymplecticVec, ExactScalar>> expansion(const Presentation& p, const CoefficientOptions& opts) {
  std::map<SymplecticVec, Tally> tallies;
  for_each_chain(
      p,
      [&](const Chain& c) {
        const SymplecticVec& end = c.steps.empty() ? p.outer() : c.steps.back();
        tallies[end][c.exponent] += c.sign ? -1 : 1;
      },
      opts);
  std::vector<std::pair<SymplecticVec, ExactScalar>> out;
  for (const auto& [v, t] : tallies) {
    ExactScalar a = total(t);
    if (!a.is_zero()) out.emplace_back(v, std::move(a));
  }
  return out;
}

bool sign_is_zero(const Presentation& p, const CoefficientOptions& opts) {
  bool zero = true;
  for_each_chain(
      p, [&](const Chain& c) { zero = zero && !c.sign; }, opts);
  return zero;
}

bool sign_is_zero_towards(const Presentation& p, const SymplecticVec& z, const CoefficientOptions& opts) {
  bool zero = true;
  for_each_chain(
      p,
      [&](const Chain& c) {
        const SymplecticVec& end = c.steps.empty() ? p.outer() : c.steps.back();
        zero = zero && (!c.sign || end != z);
      },
      opts);
  return zero;
}

Presentation peel(const Presentation& p, const F2Vec& coords) {
  if (p.depth() == 0) throw std::invalid_argument("peel: presentation has no layers");
  const auto& layer = p.layer(1);
  if (coords.size() != layer.basis.dim() || !inside(coords, anticommutation_map(layer.basis, p.outer()))) {
    throw std::invalid_argument("peel: coordinates must select anticommuting basis vectors");
  }
  const SymplecticVec next = p.outer() ^ layer.basis.combine(coords);
  const bool tau = p.tau() ^ step_sign(layer, p.outer(), coords);
  return p.without_first_layer().with_outer(next, tau);
}

}  // namespace pconj
