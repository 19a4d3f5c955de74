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


#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pconj/exact.hpp"
#include "pconj/f2.hpp"

namespace pconj {

/// log2 of the largest code enumerated by brute force.
inline constexpr std::size_t kDefaultMaxCodeRank = 22;

/// Binary linear code given by a generator matrix; rows may be dependent.
class BinaryCode {
 public:
  BinaryCode() = default;
  explicit BinaryCode(F2Matrix generator);

  const F2Matrix& generator() const noexcept { return generator_; }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t rank() const noexcept { return basis_.size(); }
  /// Independent rows spanning the code.
  const std::vector<F2Vec>& basis() const noexcept { return basis_; }

  /// Visits all 2^rank codewords. Throws if rank exceeds max_rank.
  void for_each_codeword(const std::function<void(const F2Vec&)>& fn,
                         std::size_t max_rank = kDefaultMaxCodeRank) const;

 private:
  F2Matrix generator_;
  std::vector<F2Vec> basis_;
};

/// Counts a_0..a_n of codewords by Hamming weight.
std::vector<std::uint64_t> weight_distribution(const BinaryCode& v, std::size_t max_rank = kDefaultMaxCodeRank);

/// sum_j a_j alpha^j.
ExactScalar wt_eval(const std::vector<std::uint64_t>& distribution, const ExactScalar& alpha);
RealRoot2 wt_eval(const std::vector<std::uint64_t>& distribution, const RealRoot2& alpha);
ExactScalar wt_eval(const BinaryCode& v, const ExactScalar& alpha);
RealRoot2 wt_eval(const BinaryCode& v, const RealRoot2& alpha);

/// Every codeword written k times in a row: generator [G|G|...|G].
BinaryCode repeat_code(const BinaryCode& v, std::size_t k);

/// Whether some codeword has weight exactly t.
bool binary_weight_decide(const BinaryCode& v, std::size_t t, std::size_t max_rank = kDefaultMaxCodeRank);

/// Generator [I_k | ... | I_k | P | ... | P] with r identity blocks
/// (r = 1 mod 4) and s copies of P (s = 0 mod 4).
struct OneRemainderMatrix {
  std::size_t k = 0;
  std::size_t r = 1;
  std::size_t s = 0;
  F2Matrix p;  // k rows

  std::size_t length() const noexcept { return r * k + s * p.cols(); }
  F2Matrix generator() const;
  BinaryCode code() const { return BinaryCode(generator()); }
};

/// Throws invalid_argument on a congruence violation or a row-count mismatch.
OneRemainderMatrix build_one_remainder(const F2Matrix& p, std::size_t r, std::size_t s);

/// Recovers the block structure of a generator, if it has one.
std::optional<OneRemainderMatrix> recognize_one_remainder(const F2Matrix& g);
inline bool validate_one_remainder(const F2Matrix& g) { return recognize_one_remainder(g).has_value(); }

/// Text form: one row of 0/1 characters per line. Blank lines and lines
/// starting with '#' are skipped.
F2Matrix parse_code(std::string_view text);
std::string serialize_code(const F2Matrix& g);

}  // namespace pconj
