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

#include "pconj/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pconj {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": length mismatch");
  }
}

// 64 bits starting at bit `pos`, zero past the end. Bits past size() are
// always zero, so no masking is needed here.
std::uint64_t word_at(std::span<const std::uint64_t> w, std::size_t pos) {
  const std::size_t i = pos >> 6;
  const unsigned sh = pos & 63U;
  if (i >= w.size()) return 0;
  std::uint64_t out = w[i] >> sh;
  if (sh != 0 && i + 1 < w.size()) out |= w[i + 1] << (64 - sh);
  return out;
}

std::uint64_t low_mask(std::size_t bits) { return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1; }

// OR the first `len` bits of src into dst at bit `offset`.
void or_bits(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src, std::size_t len,
             std::size_t offset) {
  for (std::size_t b = 0; b < len; b += 64) {
    const std::uint64_t w = word_at(src, b) & low_mask(len - b);
    const std::size_t pos = offset + b;
    const std::size_t i = pos >> 6;
    const unsigned sh = pos & 63U;
    dst[i] |= w << sh;
    if (sh != 0 && i + 1 < dst.size()) dst[i + 1] |= w >> (64 - sh);
  }
}

}  // namespace

F2Vec::F2Vec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

void F2Vec::grow(std::size_t extra) {
  size_ += extra;
  words_.resize(word_count(size_), 0);
}

F2Vec F2Vec::from_string(std::string_view bits) {
  F2Vec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain 0 and 1");
    }
  }
  return v;
}

F2Vec F2Vec::unit(std::size_t size, std::size_t index) {
  F2Vec v(size);
  v.set(index);
  return v;
}

F2Vec F2Vec::ones(std::size_t size) {
  F2Vec v(size);
  for (std::size_t i = 0; i < size; ++i) v.set(i);
  return v;
}

F2Vec F2Vec::concat(const F2Vec& a, const F2Vec& b) {
  F2Vec v(a.size() + b.size());
  or_bits(v.words_, a.words_, a.size(), 0);
  or_bits(v.words_, b.words_, b.size(), a.size());
  return v;
}

F2Vec& F2Vec::operator^=(const F2Vec& other) {
  require_same_size(size_, other.size_, "F2Vec xor");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

F2Vec& F2Vec::operator&=(const F2Vec& other) {
  require_same_size(size_, other.size_, "F2Vec and");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t F2Vec::popcount() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool F2Vec::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool F2Vec::dot(const F2Vec& other) const { return overlap(other) & 1U; }

std::size_t F2Vec::overlap(const F2Vec& other) const {
  require_same_size(size_, other.size_, "F2Vec dot");
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return c;
}

std::optional<std::size_t> F2Vec::first_one() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> F2Vec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

F2Vec F2Vec::slice(std::size_t begin, std::size_t length) const {
  if (begin + length > size_) throw std::out_of_range("F2Vec slice");
  F2Vec v(length);
  for (std::size_t b = 0; b < length; b += 64) v.words_[b >> 6] = word_at(words_, begin + b) & low_mask(length - b);
  return v;
}

std::string F2Vec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const F2Vec& a, const F2Vec& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff != 0) {
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[i] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t F2VecHash::operator()(const F2Vec& v) const noexcept {
  std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
  for (auto w : v.words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, F2Vec(cols)) {}

F2Matrix::F2Matrix(std::vector<F2Vec> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) require_same_size(r.size(), cols_, "F2Matrix row");
}

F2Matrix F2Matrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) return {};
  std::vector<F2Vec> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(F2Vec::from_string(r));
  const std::size_t cols = out.front().size();
  return F2Matrix(std::move(out), cols);
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void F2Matrix::push_back(F2Vec row) {
  if (rows_.empty() && cols_ == 0) cols_ = row.size();
  require_same_size(row.size(), cols_, "F2Matrix row");
  rows_.push_back(std::move(row));
}

F2Vec F2Matrix::apply(const F2Vec& v) const {
  F2Vec out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out.set(i, rows_[i].dot(v));
  return out;
}

F2Vec F2Matrix::combine(const F2Vec& coeffs) const {
  require_same_size(coeffs.size(), rows_.size(), "F2Matrix combine");
  F2Vec out(cols_);
  for (auto i : coeffs.support()) out ^= rows_[i];
  return out;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (auto c : rows_[r].support()) t.set(c, r);
  }
  return t;
}

GaussResult gauss_eliminate(const F2Matrix& m) {
  GaussResult res;
  res.rref = m;
  auto& rows = res.rref;
  const std::size_t nrows = rows.rows();
  const std::size_t ncols = rows.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && !rows.get(p, c)) ++p;
    if (p == nrows) continue;
    std::swap(rows.row(p), rows.row(r));
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i != r && rows.get(i, c)) rows.row(i) ^= rows.row(r);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : res.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    F2Vec k(ncols);
    k.set(f);
    for (std::size_t i = 0; i < res.rank; ++i) {
      if (rows.get(i, f)) k.set(res.pivot_cols[i]);
    }
    res.kernel_basis.push_back(std::move(k));
  }
  return res;
}

std::size_t rank_of(const std::vector<F2Vec>& vectors, std::size_t length) {
  SpanSolver s(length);
  for (const auto& v : vectors) s.insert(v);
  return s.rank();
}

std::optional<F2Vec> SpanSolver::insert(const F2Vec& v) {
  require_same_size(v.size(), length_, "SpanSolver insert");
  const std::size_t index = generators_++;
  for (auto& row : rows_) row.combo.grow(1);
  F2Vec w = v;
  F2Vec combo = F2Vec::unit(generators_, index);
  for (const auto& row : rows_) {
    if (w.get(row.pivot)) {
      w ^= row.vec;
      combo ^= row.combo;
    }
  }
  auto pivot = w.first_one();
  if (!pivot) return combo;
  rows_.push_back(Row{std::move(w), std::move(combo), *pivot});
  return std::nullopt;
}

std::optional<F2Vec> SpanSolver::solve(const F2Vec& v) const {
  require_same_size(v.size(), length_, "SpanSolver solve");
  F2Vec w = v;
  F2Vec combo(generators_);
  for (const auto& row : rows_) {
    if (w.get(row.pivot)) {
      w ^= row.vec;
      combo ^= row.combo;
    }
  }
  if (!w.is_zero()) return std::nullopt;
  return combo;
}

bool SpanSolver::contains(const F2Vec& v) const { return solve(v).has_value(); }

SymplecticVec::SymplecticVec(const F2Vec& z_part, const F2Vec& x_part)
    : n_(z_part.size()), bits_(F2Vec::concat(z_part, x_part)) {
  require_same_size(z_part.size(), x_part.size(), "SymplecticVec parts");
}

SymplecticVec SymplecticVec::from_bits(F2Vec bits) {
  if (bits.size() % 2 != 0) throw std::invalid_argument("symplectic bit string must have even length");
  SymplecticVec v;
  v.n_ = bits.size() / 2;
  v.bits_ = std::move(bits);
  return v;
}

SymplecticVec SymplecticVec::from_string(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) return from_bits(F2Vec::from_string(text));
  return SymplecticVec(F2Vec::from_string(text.substr(0, bar)), F2Vec::from_string(text.substr(bar + 1)));
}

SymplecticVec SymplecticVec::e_z(std::size_t n, std::size_t j) {
  SymplecticVec v(n);
  v.set_z(j);
  return v;
}

SymplecticVec SymplecticVec::e_x(std::size_t n, std::size_t j) {
  SymplecticVec v(n);
  v.set_x(j);
  return v;
}

std::size_t SymplecticVec::weight() const { return wires().size(); }

std::vector<std::size_t> SymplecticVec::wires() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j) {
    if (z(j) || x(j)) out.push_back(j);
  }
  return out;
}

SymplecticVec& SymplecticVec::operator^=(const SymplecticVec& o) {
  require_same_size(n_, o.n_, "SymplecticVec xor");
  bits_ ^= o.bits_;
  return *this;
}

bool symplectic_form(const SymplecticVec& u, const SymplecticVec& v) {
  require_same_size(u.n(), v.n(), "symplectic_form");
  const std::size_t n = u.n();
  const auto a = u.bits().words();
  const auto b = v.bits().words();
  std::uint64_t acc = 0;
  for (std::size_t j = 0; j < n; j += 64) {
    const std::uint64_t m = low_mask(n - j);
    acc ^= (word_at(a, j) & word_at(b, n + j) & m) ^ (word_at(a, n + j) & word_at(b, j) & m);
  }
  return (std::popcount(acc) & 1) != 0;
}

OrderedBasis::OrderedBasis(std::size_t n, std::vector<SymplecticVec> vectors)
    : OrderedBasis(n, std::move(vectors), false) {}

OrderedBasis::OrderedBasis(std::size_t n, std::vector<SymplecticVec> vectors, bool known_isotropic)
    : n_(n), vectors_(std::move(vectors)) {
  auto solver = std::make_shared<SpanSolver>(2 * n);
  for (const auto& v : vectors_) {
    require_same_size(v.n(), n, "OrderedBasis vector");
    if (solver->insert(v.bits())) throw std::invalid_argument("OrderedBasis: vectors are linearly dependent");
  }
  for (std::size_t i = 0; i < vectors_.size() && isotropic_ && !known_isotropic; ++i) {
    for (std::size_t j = i + 1; j < vectors_.size(); ++j) {
      if (symplectic_form(vectors_[i], vectors_[j])) {
        isotropic_ = false;
        break;
      }
    }
  }
  solver_ = std::move(solver);
}

OrderedBasis OrderedBasis::standard_z(std::size_t n, std::size_t r) {
  std::vector<SymplecticVec> v;
  for (std::size_t j = 0; j < r; ++j) v.push_back(SymplecticVec::e_z(n, j));
  return OrderedBasis(n, std::move(v), true);
}

OrderedBasis OrderedBasis::standard_x(std::size_t n, std::size_t r) {
  std::vector<SymplecticVec> v;
  for (std::size_t j = 0; j < r; ++j) v.push_back(SymplecticVec::e_x(n, j));
  return OrderedBasis(n, std::move(v), true);
}

std::optional<F2Vec> OrderedBasis::expand(const SymplecticVec& v) const {
  require_same_size(v.n(), n_, "OrderedBasis expand");
  if (!solver_) {
    if (v.is_zero()) return F2Vec(0);
    return std::nullopt;
  }
  return solver_->solve(v.bits());
}

SymplecticVec OrderedBasis::combine(const F2Vec& coeffs) const {
  require_same_size(coeffs.size(), vectors_.size(), "OrderedBasis combine");
  SymplecticVec out(n_);
  for (auto i : coeffs.support()) out ^= vectors_[i];
  return out;
}

F2Vec anticommutation_map(const OrderedBasis& x, const SymplecticVec& v) {
  require_same_size(x.n(), v.n(), "anticommutation_map");
  F2Vec out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out.set(i, symplectic_form(x[i], v));
  return out;
}

std::size_t basis_weight(const OrderedBasis& x, const SymplecticVec& v) {
  auto coeffs = x.expand(v);
  if (!coeffs) throw std::invalid_argument("basis_weight: vector is not in the span");
  return coeffs->popcount();
}

AffineSpace::AffineSpace(F2Vec offset, const std::vector<F2Vec>& generators) : offset_(std::move(offset)) {
  F2Matrix m;
  for (const auto& g : generators) {
    require_same_size(g.size(), offset_.size(), "AffineSpace generator");
    m.push_back(g);
  }
  if (!generators.empty()) {
    auto g = gauss_eliminate(m);
    for (std::size_t i = 0; i < g.rank; ++i) basis_.push_back(g.rref.row(i));
    pivots_ = g.pivot_cols;
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (offset_.get(pivots_[i])) offset_ ^= basis_[i];
  }
}

bool AffineSpace::contains(const F2Vec& p) const {
  require_same_size(p.size(), offset_.size(), "AffineSpace contains");
  F2Vec w = p ^ offset_;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (w.get(pivots_[i])) w ^= basis_[i];
  }
  return w.is_zero();
}

void AffineSpace::for_each_point(const std::function<void(const F2Vec&)>& fn) const {
  if (basis_.size() >= 40) throw std::length_error("AffineSpace too large to enumerate");
  F2Vec p = offset_;
  const std::uint64_t count = std::uint64_t{1} << basis_.size();
  fn(p);
  for (std::uint64_t i = 1; i < count; ++i) {
    p ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
    fn(p);
  }
}

std::vector<F2Vec> AffineSpace::points() const {
  std::vector<F2Vec> out;
  for_each_point([&](const F2Vec& p) { out.push_back(p); });
  return out;
}

AffineSpace selected_subspace(const OrderedBasis& x, const F2Vec& z) {
  require_same_size(z.size(), x.dim(), "selected_subspace");
  std::vector<F2Vec> gens;
  for (auto j : z.support()) gens.push_back(x[j].bits());
  return AffineSpace(F2Vec(2 * x.n()), gens);
}

std::optional<AffineSpace> affine_intersect(const AffineSpace& a, const AffineSpace& b) {
  require_same_size(a.ambient(), b.ambient(), "affine_intersect");
  const std::size_t m = a.ambient();
  const std::size_t ra = a.dim();
  SpanSolver solver(m);
  std::vector<F2Vec> relations;
  for (const auto& g : a.basis()) solver.insert(g);
  for (const auto& g : b.basis()) {
    if (auto rel = solver.insert(g)) relations.push_back(*rel);
  }
  auto sol = solver.solve(a.offset() ^ b.offset());
  if (!sol) return std::nullopt;
  // sum_i s_i a_i + sum_j s_j b_j = oa + ob, so oa + sum_i s_i a_i lies in both.
  F2Vec p = a.offset();
  for (auto i : sol->support()) {
    if (i < ra) p ^= a.basis()[i];
  }
  std::vector<F2Vec> dirs;
  for (const auto& rel : relations) {
    F2Vec d(m);
    for (auto i : rel.support()) {
      if (i < ra) d ^= a.basis()[i];
    }
    dirs.push_back(std::move(d));
  }
  return AffineSpace(std::move(p), dirs);
}

}  // namespace pconj
