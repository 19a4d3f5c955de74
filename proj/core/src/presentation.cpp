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


#include "pconj/presentation.hpp"

#include <sstream>
#include <stdexcept>

#include "pconj/synthesis.hpp"

namespace pconj {

Presentation::Presentation(std::size_t n, std::vector<PresentationLayer> layers, SymplecticVec outer, bool tau)
    : n_(n), layers_(std::move(layers)), outer_(std::move(outer)), tau_(tau) {
  if (outer_.n() != n_) throw std::invalid_argument("presentation: outer vector width mismatch");
  if (outer_.is_zero() && tau_) throw std::invalid_argument("presentation: outer pair (0, 1) is not allowed");
  for (const auto& l : layers_) {
    if (l.basis.n() != n_) throw std::invalid_argument("presentation: layer width mismatch");
    if (!l.basis.isotropic()) throw std::invalid_argument("presentation: layer basis is not isotropic");
    if (l.signs.size() != l.basis.dim()) throw std::invalid_argument("presentation: sign vector length mismatch");
  }
}

namespace {

PresentationLayer conjugate_layer(const PresentationLayer& l, const CliffordTableau& t) {
  std::vector<SymplecticVec> vecs;
  F2Vec signs(l.basis.dim());
  for (std::size_t i = 0; i < l.basis.dim(); ++i) {
    auto img = t.apply(PhasedPauli::signed_pauli(l.basis[i], l.signs.get(i)));
    vecs.push_back(img.v);
    signs.set(i, img.negative());
  }
  return {OrderedBasis(l.basis.n(), std::move(vecs)), std::move(signs)};
}

}  // namespace

Presentation Presentation::conjugated(const CliffordTableau& t) const {
  std::vector<PresentationLayer> layers;
  layers.reserve(layers_.size());
  for (const auto& l : layers_) layers.push_back(conjugate_layer(l, t));
  auto out = t.apply(PhasedPauli::signed_pauli(outer_, tau_));
  return Presentation(n_, std::move(layers), out.v, out.negative());
}

Presentation Presentation::with_outer(const SymplecticVec& outer, bool tau) const {
  return Presentation(n_, layers_, outer, tau);
}

Presentation Presentation::without_first_layer() const {
  if (layers_.empty()) throw std::invalid_argument("presentation has no layers");
  return Presentation(n_, std::vector<PresentationLayer>(layers_.begin() + 1, layers_.end()), outer_, tau_);
}

Presentation encode(const Circuit& c, const SymplecticVec& x) {
  const std::size_t n = c.qubits();
  if (x.n() != n) throw std::invalid_argument("encode: Pauli width mismatch");
  const auto dec = layer_decompose(c);
  Presentation p = Presentation::pauli(x, false).conjugated(tableau_from_circuit(dec.cliffords[0]));
  for (std::size_t j = 0; j < dec.depth(); ++j) {
    std::vector<SymplecticVec> zs;
    for (auto q : dec.layers[j].support()) zs.push_back(SymplecticVec::e_z(n, q));
    auto layers = p.layers();
    // T = e^{i pi/8} exp(-i pi/8 Z), so each T layer is (E_Z, all ones).
    layers.push_back({OrderedBasis(n, std::move(zs)), F2Vec::ones(dec.layers[j].popcount())});
    p = Presentation(n, std::move(layers), p.outer(), p.tau()).conjugated(tableau_from_circuit(dec.cliffords[j + 1]));
  }
  return p;
}

Circuit decode(const Presentation& p, const SymplecticVec& z) {
  const std::size_t n = p.qubits();
  if (z.n() != n) throw std::invalid_argument("decode: Pauli width mismatch");
  if (z.is_zero() != p.outer().is_zero()) {
    throw std::invalid_argument("decode: z must be zero exactly when the outer vector is zero");
  }
  if (p.depth() == 0) {
    if (z.is_zero()) return Circuit(n);
    return transport_pauli(PhasedPauli(z), PhasedPauli::signed_pauli(p.outer(), p.tau()));
  }
  const auto& top = p.layers().back();
  std::vector<std::pair<SymplecticVec, bool>> images;
  for (std::size_t i = 0; i < top.basis.dim(); ++i) images.emplace_back(top.basis[i], !top.signs.get(i));
  const Circuit a = synthesize_from_images(n, images);
  const auto a_inv = tableau_from_circuit(dagger(a));
  std::vector<PresentationLayer> rest(p.layers().begin(), p.layers().end() - 1);
  const Presentation inner = Presentation(n, std::move(rest), p.outer(), p.tau()).conjugated(a_inv);
  Circuit c = decode(inner, z);
  F2Vec mask(n);
  for (std::size_t i = 0; i < top.basis.dim(); ++i) mask.set(i);
  append_t_layer(c, mask);
  c.append(a);
  return c;
}

ProductForm product_form(const Presentation& p) {
  ProductForm out;
  out.tail = PhasedPauli::signed_pauli(p.outer(), p.tau());
  const std::size_t d = p.depth();
  for (std::size_t j = 1; j <= d; ++j) {
    const auto& l = p.layer(j);
    const std::vector<PresentationLayer> above(p.layers().begin() + static_cast<std::ptrdiff_t>(j), p.layers().end());
    for (std::size_t s = 0; s < l.basis.dim(); ++s) {
      if (!symplectic_form(l.basis[s], p.outer())) continue;
      out.factors.push_back({j, s, Presentation(p.qubits(), above, l.basis[s], l.signs.get(s))});
    }
  }
  return out;
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  out << "presentation n=" << p.qubits() << " d=" << p.depth() << '\n';
  for (std::size_t j = p.depth(); j >= 1; --j) {
    const auto& l = p.layer(j);
    out << "layer " << j << " dim=" << l.basis.dim() << '\n';
    for (std::size_t i = 0; i < l.basis.dim(); ++i) {
      out << l.basis[i].to_string() << ' ' << (l.signs.get(i) ? 1 : 0) << '\n';
    }
  }
  out << "outer " << p.outer().to_string() << ' ' << (p.tau() ? 1 : 0) << '\n';
  return out.str();
}

namespace {

std::size_t read_keyed(std::istream& in, const std::string& key) {
  std::string tok;
  if (!(in >> tok) || tok.rfind(key + "=", 0) != 0) throw std::invalid_argument("presentation: expected " + key + "=");
  return static_cast<std::size_t>(std::stoull(tok.substr(key.size() + 1)));
}

bool read_bit(std::istream& in) {
  int b = -1;
  if (!(in >> b) || (b != 0 && b != 1)) throw std::invalid_argument("presentation: expected a 0/1 bit");
  return b == 1;
}

SymplecticVec read_vec(std::istream& in, std::size_t n) {
  std::string bits;
  if (!(in >> bits) || bits.size() != 2 * n) throw std::invalid_argument("presentation: bad vector length");
  return SymplecticVec::from_string(bits);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok) || tok != "presentation") throw std::invalid_argument("presentation: missing header");
  const std::size_t n = read_keyed(in, "n");
  const std::size_t d = read_keyed(in, "d");
  std::vector<PresentationLayer> layers(d);
  for (std::size_t j = d; j >= 1; --j) {
    std::size_t idx = 0;
    if (!(in >> tok) || tok != "layer" || !(in >> idx) || idx != j) {
      throw std::invalid_argument("presentation: expected 'layer " + std::to_string(j) + "'");
    }
    const std::size_t r = read_keyed(in, "dim");
    std::vector<SymplecticVec> vecs;
    F2Vec signs(r);
    for (std::size_t i = 0; i < r; ++i) {
      vecs.push_back(read_vec(in, n));
      signs.set(i, read_bit(in));
    }
    layers[j - 1] = {OrderedBasis(n, std::move(vecs)), std::move(signs)};
  }
  if (!(in >> tok) || tok != "outer") throw std::invalid_argument("presentation: missing outer line");
  auto y = read_vec(in, n);
  const bool tau = read_bit(in);
  if (in >> tok) throw std::invalid_argument("presentation: trailing text");
  return Presentation(n, std::move(layers), y, tau);
}

}  // namespace pconj
