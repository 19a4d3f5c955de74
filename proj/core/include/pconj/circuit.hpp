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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pconj/f2.hpp"
#include "pconj/gate.hpp"

namespace pconj {

/// Clifford+T circuit on a fixed register. Gates are stored in time order,
/// so the unitary is G_m ... G_1.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t qubits) : n_(qubits) {}

  std::size_t qubits() const noexcept { return n_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  Circuit& add(const Gate& g);
  Circuit& append(const Circuit& other);
  /// Appends `other` with its wire i mapped to wires[i].
  Circuit& append_mapped(const Circuit& other, std::span<const std::size_t> wires);
  /// Appends `other` shifted up by `offset` wires.
  Circuit& append_shifted(const Circuit& other, std::size_t offset);
  /// Same gates on a register of `qubits` >= qubits() wires.
  Circuit widened(std::size_t qubits) const;

  bool is_clifford() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Gate> gates_;
};

/// Text form: "qubits <n>" then one "<MNEMONIC> <wire>[ <wire2>]" per line,
/// wires 1-based, "#" starts a comment.
Circuit parse_circuit(std::string_view text);
std::string serialize(const Circuit& c);

std::size_t t_count(const Circuit& c);
std::size_t t_depth(const Circuit& c);

/// A_0 T_1 A_1 ... T_d A_d in time order.
struct LayerDecomposition {
  std::vector<Circuit> cliffords;  // d + 1 entries
  std::vector<F2Vec> layers;       // d nonempty wire masks

  std::size_t depth() const noexcept { return layers.size(); }
};

/// Greedy left packing: a T joins the open layer iff its wire is not yet in
/// it and no Clifford gate has touched the wire since the layer opened.
LayerDecomposition layer_decompose(const Circuit& c);
Circuit recompose(const LayerDecomposition& layers);

/// Appends a parallel T layer on `mask`, inserting H H pairs where needed so
/// the layer does not merge into the circuit's last open layer.
void append_t_layer(Circuit& c, const F2Vec& mask);

/// Exact inverse within the gate set: S^-1 = S Z, T^-1 = T S Z.
/// T-depth and T-count are preserved.
Circuit dagger(const Circuit& c);

}  // namespace pconj
