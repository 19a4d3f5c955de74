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


#include "pconj/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace pconj {

std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "X";
    case GateKind::Z:
      return "Z";
    case GateKind::H:
      return "H";
    case GateKind::S:
      return "S";
    case GateKind::CZ:
      return "CZ";
    case GateKind::T:
      return "T";
  }
  return "?";
}

GateKind parse_mnemonic(std::string_view text) {
  if (text == "X") return GateKind::X;
  if (text == "Z") return GateKind::Z;
  if (text == "H") return GateKind::H;
  if (text == "S") return GateKind::S;
  if (text == "CZ") return GateKind::CZ;
  if (text == "T") return GateKind::T;
  throw std::invalid_argument("unknown gate '" + std::string(text) + "'");
}

Circuit& Circuit::add(const Gate& g) {
  if (g.a >= n_ || (g.two_qubit() && g.b >= n_)) {
    throw std::out_of_range("gate wire outside the register");
  }
  if (g.two_qubit() && g.a == g.b) throw std::invalid_argument("CZ needs two distinct wires");
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_ > n_) throw std::invalid_argument("appended circuit is wider than the register");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit& Circuit::append_mapped(const Circuit& other, std::span<const std::size_t> wires) {
  if (wires.size() < other.n_) throw std::invalid_argument("wire map too short");
  gates_.reserve(gates_.size() + other.gates_.size());
  for (const auto& g : other.gates_) {
    Gate m = g;
    m.a = wires[g.a];
    if (g.two_qubit()) m.b = wires[g.b];
    add(m);
  }
  return *this;
}

Circuit& Circuit::append_shifted(const Circuit& other, std::size_t offset) {
  if (other.n_ + offset > n_) throw std::invalid_argument("shifted circuit does not fit");
  gates_.reserve(gates_.size() + other.gates_.size());
  for (const auto& g : other.gates_) {
    Gate m = g;
    m.a += offset;
    if (g.two_qubit()) m.b += offset;
    gates_.push_back(m);
  }
  return *this;
}

Circuit Circuit::widened(std::size_t qubits) const {
  if (qubits < n_) throw std::invalid_argument("cannot narrow a circuit");
  Circuit c(qubits);
  c.gates_ = gates_;
  return c;
}

bool Circuit::is_clifford() const {
  for (const auto& g : gates_) {
    if (g.is_t()) return false;
  }
  return true;
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Circuit c;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
    };
    if (!have_header) {
      long long n = -1;
      if (head != "qubits" || !(ls >> n) || n < 0) fail("expected 'qubits <n>'");
      c = Circuit(static_cast<std::size_t>(n));
      have_header = true;
      continue;
    }
    const GateKind kind = parse_mnemonic(head);
    const int arity = kind == GateKind::CZ ? 2 : 1;
    long long w[2] = {0, 0};
    for (int i = 0; i < arity; ++i) {
      if (!(ls >> w[i])) fail("missing wire");
      if (w[i] < 1 || static_cast<std::size_t>(w[i]) > c.qubits()) fail("wire out of range");
    }
    std::string extra;
    if (ls >> extra) fail("trailing text '" + extra + "'");
    Gate g{kind, static_cast<std::size_t>(w[0] - 1), arity == 2 ? static_cast<std::size_t>(w[1] - 1) : 0};
    if (g.two_qubit() && g.a == g.b) fail("CZ needs two distinct wires");
    c.add(g);
  }
  if (!have_header) throw std::invalid_argument("missing 'qubits <n>' header");
  return c;
}

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.qubits() << '\n';
  for (const auto& g : c.gates()) {
    out << mnemonic(g.kind) << ' ' << (g.a + 1);
    if (g.two_qubit()) out << ' ' << (g.b + 1);
    out << '\n';
  }
  return out.str();
}

std::size_t t_count(const Circuit& c) {
  std::size_t k = 0;
  for (const auto& g : c.gates()) k += g.is_t();
  return k;
}

namespace {

// Tracks the greedy layering of a gate stream.
struct LayerScan {
  explicit LayerScan(std::size_t n) : layer(n), blocked(n) {}

  // Returns true when the T opens a new layer.
  bool push(const Gate& g) {
    if (g.is_t()) {
      if (open && !layer.get(g.a) && !blocked.get(g.a)) {
        layer.set(g.a);
        return false;
      }
      layer = F2Vec(layer.size());
      blocked = F2Vec(layer.size());
      layer.set(g.a);
      open = true;
      ++depth;
      return true;
    }
    if (open) {
      blocked.set(g.a);
      if (g.two_qubit()) blocked.set(g.b);
    }
    return false;
  }

  bool open = false;
  std::size_t depth = 0;
  F2Vec layer;
  F2Vec blocked;
};

}  // namespace

std::size_t t_depth(const Circuit& c) {
  LayerScan scan(c.qubits());
  for (const auto& g : c.gates()) scan.push(g);
  return scan.depth;
}

LayerDecomposition layer_decompose(const Circuit& c) {
  LayerDecomposition out;
  out.cliffords.emplace_back(c.qubits());
  LayerScan scan(c.qubits());
  for (const auto& g : c.gates()) {
    const bool opened = scan.push(g);
    if (g.is_t()) {
      if (opened) {
        out.layers.emplace_back(c.qubits());
        out.cliffords.emplace_back(c.qubits());
      }
      out.layers.back().set(g.a);
    } else {
      out.cliffords.back().add(g);
    }
  }
  return out;
}

void append_t_layer(Circuit& c, const F2Vec& mask) {
  if (mask.size() != c.qubits()) throw std::invalid_argument("T layer mask length mismatch");
  LayerScan scan(c.qubits());
  for (const auto& g : c.gates()) scan.push(g);
  const auto wires = mask.support();
  if (scan.open) {
    for (auto q : wires) {
      if (!scan.layer.get(q) && !scan.blocked.get(q)) {
        c.add(Gate::h(q));
        c.add(Gate::h(q));
      }
    }
  }
  for (auto q : wires) c.add(Gate::t(q));
}

Circuit recompose(const LayerDecomposition& layers) {
  if (layers.cliffords.size() != layers.layers.size() + 1) {
    throw std::invalid_argument("layer decomposition needs one more Clifford block than T layers");
  }
  Circuit c(layers.cliffords.front().qubits());
  c.append(layers.cliffords[0]);
  for (std::size_t i = 0; i < layers.layers.size(); ++i) {
    append_t_layer(c, layers.layers[i]);
    c.append(layers.cliffords[i + 1]);
  }
  return c;
}

namespace {

void append_inverse_clifford(Circuit& out, const Circuit& block) {
  const auto& gs = block.gates();
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
    out.add(*it);
    if (it->kind == GateKind::S) out.add(Gate::z(it->a));
  }
}

}  // namespace

Circuit dagger(const Circuit& c) {
  const auto dec = layer_decompose(c);
  Circuit out(c.qubits());
  for (std::size_t i = dec.depth() + 1; i-- > 0;) {
    append_inverse_clifford(out, dec.cliffords[i]);
    if (i == 0) break;
    const auto& mask = dec.layers[i - 1];
    append_t_layer(out, mask);
    for (auto q : mask.support()) {
      out.add(Gate::s(q));
      out.add(Gate::z(q));
    }
  }
  return out;
}

}  // namespace pconj
