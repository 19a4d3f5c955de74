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


#include "pconj/coding.hpp"

#include <sstream>
#include <stdexcept>

namespace pconj {

BinaryCode::BinaryCode(F2Matrix generator) : generator_(std::move(generator)) {
  SpanSolver solver(generator_.cols());
  for (const auto& row : generator_.row_list()) {
    if (!solver.insert(row)) basis_.push_back(row);
  }
}

void BinaryCode::for_each_codeword(const std::function<void(const F2Vec&)>& fn, std::size_t max_rank) const {
  const std::size_t k = rank();
  if (k > max_rank) throw std::length_error("code rank " + std::to_string(k) + " exceeds the enumeration bound");
  F2Vec word(length());
  fn(word);
  // Gray code: step i flips the generator at the lowest set bit of i.
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    word ^= basis_[static_cast<std::size_t>(__builtin_ctzll(i))];
    fn(word);
  }
}

std::vector<std::uint64_t> weight_distribution(const BinaryCode& v, std::size_t max_rank) {
  std::vector<std::uint64_t> a(v.length() + 1, 0);
  v.for_each_codeword([&](const F2Vec& w) { ++a[w.popcount()]; }, max_rank);
  return a;
}

namespace {

template <class Scalar>
Scalar horner(const std::vector<std::uint64_t>& a, const Scalar& alpha) {
  Scalar acc(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * alpha + Scalar(static_cast<std::int64_t>(*it));
  return acc;
}

}  // namespace

ExactScalar wt_eval(const std::vector<std::uint64_t>& distribution, const ExactScalar& alpha) {
  return horner(distribution, alpha);
}
RealRoot2 wt_eval(const std::vector<std::uint64_t>& distribution, const RealRoot2& alpha) {
  return horner(distribution, alpha);
}
ExactScalar wt_eval(const BinaryCode& v, const ExactScalar& alpha) { return wt_eval(weight_distribution(v), alpha); }
RealRoot2 wt_eval(const BinaryCode& v, const RealRoot2& alpha) { return wt_eval(weight_distribution(v), alpha); }

namespace {

F2Matrix hconcat(const std::vector<const F2Matrix*>& blocks, std::size_t rows) {
  std::vector<F2Vec> out(rows);
  std::size_t cols = 0;
  for (const auto* b : blocks) cols += b->cols();
  for (std::size_t i = 0; i < rows; ++i) {
    F2Vec row(cols);
    std::size_t off = 0;
    for (const auto* b : blocks) {
      for (std::size_t c = 0; c < b->cols(); ++c) row.set(off + c, b->get(i, c));
      off += b->cols();
    }
    out[i] = std::move(row);
  }
  return F2Matrix(std::move(out), cols);
}

}  // namespace

BinaryCode repeat_code(const BinaryCode& v, std::size_t k) {
  if (k == 0) throw std::invalid_argument("repeat_code: k must be positive");
  std::vector<const F2Matrix*> blocks(k, &v.generator());
  return BinaryCode(hconcat(blocks, v.generator().rows()));
}

bool binary_weight_decide(const BinaryCode& v, std::size_t t, std::size_t max_rank) {
  if (t > v.length()) return false;
  if (t == 0) return true;
  return weight_distribution(v, max_rank)[t] > 0;
}

F2Matrix OneRemainderMatrix::generator() const {
  const F2Matrix id = F2Matrix::identity(k);
  std::vector<const F2Matrix*> blocks(r, &id);
  for (std::size_t i = 0; i < s; ++i) blocks.push_back(&p);
  return hconcat(blocks, k);
}

OneRemainderMatrix build_one_remainder(const F2Matrix& p, std::size_t r, std::size_t s) {
  if (r % 4 != 1) throw std::invalid_argument("one-remainder: identity block count must be 1 mod 4");
  if (s % 4 != 0) throw std::invalid_argument("one-remainder: P block count must be 0 mod 4");
  if (p.rows() == 0) throw std::invalid_argument("one-remainder: P needs at least one row");
  return OneRemainderMatrix{p.rows(), r, s, p};
}

std::optional<OneRemainderMatrix> recognize_one_remainder(const F2Matrix& g) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (k == 0) return std::nullopt;
  auto block_is_identity = [&](std::size_t off) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < k; ++c) {
        if (g.get(i, off + c) != (i == c)) return false;
      }
    }
    return true;
  };
  for (std::size_t r = 1; r * k <= n; r += 4) {
    bool ok = true;
    for (std::size_t b = 0; b < r && ok; ++b) ok = block_is_identity(b * k);
    if (!ok) break;
    const std::size_t rest = n - r * k;
    if (rest == 0) return OneRemainderMatrix{k, r, 0, F2Matrix(k, 0)};
    for (std::size_t s = 4; s <= rest; s += 4) {
      if (rest % s != 0) continue;
      const std::size_t w = rest / s;
      bool same = true;
      for (std::size_t i = 0; i < k && same; ++i) {
        for (std::size_t c = 0; c < w && same; ++c) {
          const bool bit = g.get(i, r * k + c);
          for (std::size_t b = 1; b < s && same; ++b) same = g.get(i, r * k + b * w + c) == bit;
        }
      }
      if (!same) continue;
      F2Matrix p(k, w);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < w; ++c) p.set(i, c, g.get(i, r * k + c));
      }
      return OneRemainderMatrix{k, r, s, std::move(p)};
    }
  }
  return std::nullopt;
}

F2Matrix parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    line = line.substr(start);
    if (line.find_first_not_of("01") != std::string::npos) {
      throw std::invalid_argument("code: rows must contain only 0 and 1");
    }
    if (!rows.empty() && line.size() != rows.front().size()) throw std::invalid_argument("code: rows differ in length");
    rows.push_back(line);
  }
  if (rows.empty()) throw std::invalid_argument("code: no rows");
  return F2Matrix::from_strings(rows);
}

std::string serialize_code(const F2Matrix& g) {
  std::string out;
  for (const auto& row : g.row_list()) out += row.to_string() + "\n";
  return out;
}

}  // namespace pconj
