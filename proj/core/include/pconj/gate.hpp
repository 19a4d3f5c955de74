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

#include <cstddef>
#include <string>
#include <string_view>

namespace pconj {

enum class GateKind { X, Z, H, S, CZ, T };

/// One gate of the {X, Z, H, S, CZ, T} set. Wires are 0-based; `b` is only
/// meaningful for CZ.
struct Gate {
  GateKind kind = GateKind::H;
  std::size_t a = 0;
  std::size_t b = 0;

  static Gate x(std::size_t q) { return {GateKind::X, q, 0}; }
  static Gate z(std::size_t q) { return {GateKind::Z, q, 0}; }
  static Gate h(std::size_t q) { return {GateKind::H, q, 0}; }
  static Gate s(std::size_t q) { return {GateKind::S, q, 0}; }
  static Gate t(std::size_t q) { return {GateKind::T, q, 0}; }
  static Gate cz(std::size_t p, std::size_t q) { return {GateKind::CZ, p, q}; }

  bool two_qubit() const noexcept { return kind == GateKind::CZ; }
  bool is_t() const noexcept { return kind == GateKind::T; }
  bool touches(std::size_t q) const noexcept { return a == q || (two_qubit() && b == q); }

  friend bool operator==(const Gate& l, const Gate& r) {
    if (l.kind != r.kind || l.a != r.a) return false;
    return !l.two_qubit() || l.b == r.b;
  }
};

std::string_view mnemonic(GateKind kind);
GateKind parse_mnemonic(std::string_view text);

}  // namespace pconj
