/* Copyright 2026 The h3cover Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "h3cover/multilinear.hpp"

#include <stdexcept>

namespace h3cover {

namespace {

// 0-based index pairs of the W basis, slot order.
constexpr std::array<std::pair<std::size_t, std::size_t>, kWedgeDim> kSlotPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Slots of the U monomials w1w6, w2w5, w3w4; the first one decides the
// canonical coset member.
constexpr std::size_t kUFirst = sym_index(0, 5);

template <class V>
std::array<Scalar, kWedgeDim> wedge_coords(const Field& F, const V& a, const V& b) {
  std::array<Scalar, kWedgeDim> out{};
  for (std::size_t s = 0; s < kWedgeDim; ++s) {
    const auto [i, j] = kSlotPairs[s];
    out[s] = F.mul(a.c[i], b.c[j]) + F.mul(a.c[j], b.c[i]);
  }
  return out;
}

}  // namespace

std::pair<std::size_t, std::size_t> sym_monomial(std::size_t index) {
  for (std::size_t a = 0; a < kWedgeDim; ++a)
    for (std::size_t b = a; b < kWedgeDim; ++b)
      if (sym_index(a, b) == index) return {a, b};
  throw std::out_of_range("monomial index out of range");
}

bool Bivector::is_zero() const {
  for (auto s : c)
    if (!s.is_zero()) return false;
  return true;
}

Bivector operator+(const Bivector& a, const Bivector& b) {
  Bivector out;
  for (std::size_t i = 0; i < kWedgeDim; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

DualBivector operator+(const DualBivector& a, const DualBivector& b) {
  DualBivector out;
  for (std::size_t i = 0; i < kWedgeDim; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

bool SymTensor::is_zero() const {
  for (auto s : c)
    if (!s.is_zero()) return false;
  return true;
}

SymTensor operator+(const SymTensor& a, const SymTensor& b) {
  SymTensor out = a;
  out += b;
  return out;
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  for (std::size_t i = 0; i < kSymDim; ++i) c[i] += o.c[i];
  return *this;
}

Bivector w(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("W basis index must be in 1..6");
  Bivector a;
  a.c[static_cast<std::size_t>(i - 1)] = Scalar(1u);
  return a;
}

SymTensor monomial(int i, int j) {
  if (i < 1 || i > 6 || j < 1 || j > 6) throw std::out_of_range("W basis index must be in 1..6");
  auto a = static_cast<std::size_t>(i - 1);
  auto b = static_cast<std::size_t>(j - 1);
  if (a > b) std::swap(a, b);
  SymTensor t;
  t.c[sym_index(a, b)] = Scalar(1u);
  return t;
}

Bivector scale(const Field& F, Scalar s, const Bivector& a) {
  Bivector out;
  for (std::size_t i = 0; i < kWedgeDim; ++i) out.c[i] = F.mul(s, a.c[i]);
  return out;
}

SymTensor scale(const Field& F, Scalar s, const SymTensor& t) {
  SymTensor out;
  for (std::size_t i = 0; i < kSymDim; ++i) out.c[i] = F.mul(s, t.c[i]);
  return out;
}

Bivector wedge(const Field& F, const Vector& a, const Vector& b) {
  return Bivector{wedge_coords(F, a, b)};
}

DualBivector wedge(const Field& F, const Covector& a, const Covector& b) {
  return DualBivector{wedge_coords(F, a, b)};
}

Scalar wedge4(const Field& F, const Vector& a, const Vector& b, const Vector& c,
              const Vector& d) {
  Matrix4 m;
  m.m = {a.c, b.c, c.c, d.c};
  return det(F, m);
}

Bivector phi(const DualBivector& d) {
  Bivector out;
  for (std::size_t s = 0; s < kWedgeDim; ++s) out.c[s] = d.c[kWedgeDim - 1 - s];
  return out;
}

Scalar dual_pairing(const Field& F, const DualBivector& fh, const Bivector& vh) {
  // Dual bases: B(f_i^f_j, e_k^e_l) is 1 exactly on matching slots.
  Scalar acc;
  for (std::size_t s = 0; s < kWedgeDim; ++s) acc += F.mul(fh.c[s], vh.c[s]);
  return acc;
}

Scalar wedge_pairing(const Field& F, const Bivector& a, const Bivector& b) {
  Scalar acc;
  for (std::size_t s = 0; s < kWedgeDim; ++s) acc += F.mul(a.c[s], b.c[kWedgeDim - 1 - s]);
  return acc;
}

bool phi_consistency_check(const Field& F) {
  for (std::size_t s = 0; s < kWedgeDim; ++s) {
    const auto [i, j] = kSlotPairs[s];
    const Covector fi = f(static_cast<int>(i) + 1);
    const Covector fj = f(static_cast<int>(j) + 1);
    DualBivector fh;
    fh.c[s] = F.one();
    const Bivector image = phi(fh);
    // phi maps basis to basis; recover the two vectors spanning the image.
    std::size_t slot = kWedgeDim;
    for (std::size_t u = 0; u < kWedgeDim; ++u)
      if (!image.c[u].is_zero()) slot = u;
    if (slot == kWedgeDim) return false;
    const auto [a, b] = kSlotPairs[slot];
    const Vector ea = e(static_cast<int>(a) + 1);
    const Vector eb = e(static_cast<int>(b) + 1);

    for (std::size_t t = 0; t < kWedgeDim; ++t) {
      const auto [k, l] = kSlotPairs[t];
      const Vector ek = e(static_cast<int>(k) + 1);
      const Vector el = e(static_cast<int>(l) + 1);
      const Scalar lhs =
          F.mul(eval(F, fi, ek), eval(F, fj, el)) + F.mul(eval(F, fi, el), eval(F, fj, ek));
      const Scalar rhs = F.mul(image.c[slot], wedge4(F, ea, eb, ek, el));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

SymTensor sym_mul(const Field& F, const Bivector& a, const Bivector& b) {
  SymTensor out;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < kWedgeDim; ++i) {
    out.c[idx++] = F.mul(a.c[i], b.c[i]);
    for (std::size_t j = i + 1; j < kWedgeDim; ++j)
      out.c[idx++] = F.mul(a.c[i], b.c[j]) + F.mul(a.c[j], b.c[i]);
  }
  return out;
}

SymTensor square(const Field& F, const Bivector& a) { return sym_mul(F, a, a); }

SymTensor delta(const Field& F, const Vector& w0, const Vector& x, const Vector& y,
                const Vector& z) {
  return sym_mul(F, wedge(F, w0, x), wedge(F, y, z)) +
         sym_mul(F, wedge(F, w0, y), wedge(F, z, x)) +
         sym_mul(F, wedge(F, w0, z), wedge(F, x, y));
}

SymTensor big_u(const Field& F) { return delta(F, e(1), e(2), e(3), e(4)); }

SymTensor big_u() { return monomial(1, 6) + monomial(2, 5) + monomial(3, 4); }

bool in_w2(const SymTensor& s) {
  for (std::size_t i = 0; i < kWedgeDim; ++i)
    for (std::size_t j = i + 1; j < kWedgeDim; ++j)
      if (!s.c[sym_index(i, j)].is_zero()) return false;
  return true;
}

bool in_w2_plus_u(const SymTensor& s) { return in_w2(s) || in_w2(s + big_u()); }

Bits to_bits(const SymTensor& s, int degree) {
  const auto k = static_cast<std::size_t>(degree);
  Bits out(kSymDim * k);
  for (std::size_t i = 0; i < kSymDim; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (s.c[i].bits >> j & 1u) out.set(i * k + j);
  return out;
}

SymTensor sym_from_bits(const Bits& b, int degree) {
  const auto k = static_cast<std::size_t>(degree);
  if (b.size() != kSymDim * k) throw std::invalid_argument("sym_from_bits: width mismatch");
  SymTensor s;
  for (std::size_t i = 0; i < kSymDim; ++i) {
    unsigned v = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (b.test(i * k + j)) v |= 1u << j;
    s.c[i] = Scalar(v);
  }
  return s;
}

Bits to_bits(const Bivector& a, int degree) {
  const auto k = static_cast<std::size_t>(degree);
  Bits out(kWedgeDim * k);
  for (std::size_t i = 0; i < kWedgeDim; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (a.c[i].bits >> j & 1u) out.set(i * k + j);
  return out;
}

Bivector bivector_from_bits(const Bits& b, int degree) {
  const auto k = static_cast<std::size_t>(degree);
  if (b.size() != kWedgeDim * k) throw std::invalid_argument("bivector_from_bits: width mismatch");
  Bivector a;
  for (std::size_t i = 0; i < kWedgeDim; ++i) {
    unsigned v = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (b.test(i * k + j)) v |= 1u << j;
    a.c[i] = Scalar(v);
  }
  return a;
}

NElement project_n(const SymTensor& s) {
  // s and s + U first differ at w1w6, where they differ in bit 0.
  if (s.c[kUFirst].bits & 1u) return NElement(s + big_u());
  return NElement(s);
}

NElement operator+(const NElement& a, const NElement& b) { return project_n(a.rep_ + b.rep_); }

std::array<SymTensor, 2> lift_n(const NElement& n) { return {n.rep(), n.rep() + big_u()}; }

Bivector act_w(const Field& F, const Matrix4& g, const Bivector& a) {
  Bivector out;
  for (std::size_t s = 0; s < kWedgeDim; ++s) {
    if (a.c[s].is_zero()) continue;
    const auto [i, j] = kSlotPairs[s];
    const Vector ri{g.m[i]};
    const Vector rj{g.m[j]};
    out = out + scale(F, a.c[s], wedge(F, ri, rj));
  }
  return out;
}

S2Action::S2Action(const Field& F, const Matrix4& g) : field_(F), g_(g) {
  for (std::size_t s = 0; s < kWedgeDim; ++s) w_images_[s] = act_w(F, g, w(static_cast<int>(s) + 1));
  for (std::size_t idx = 0; idx < kSymDim; ++idx) {
    const auto [a, b] = sym_monomial(idx);
    images_[idx] = sym_mul(F, w_images_[a], w_images_[b]);
  }
}

Bivector S2Action::apply(const Bivector& a) const {
  Bivector out;
  for (std::size_t s = 0; s < kWedgeDim; ++s)
    if (!a.c[s].is_zero()) out = out + scale(field_, a.c[s], w_images_[s]);
  return out;
}

SymTensor S2Action::apply(const SymTensor& s) const {
  SymTensor out;
  for (std::size_t idx = 0; idx < kSymDim; ++idx) {
    const Scalar c = s.c[idx];
    if (c.is_zero()) continue;
    for (std::size_t r = 0; r < kSymDim; ++r) out.c[r] += field_.mul(c, images_[idx].c[r]);
  }
  return out;
}

SymTensor act_s2(const Field& F, const Matrix4& g, const SymTensor& s) {
  return S2Action(F, g).apply(s);
}

NElement act_n(const Field& F, const Matrix4& g, const NElement& n) {
  if (det(F, g) != F.one()) throw std::domain_error("act_n requires det(g) = 1");
  return project_n(act_s2(F, g, n.rep()));
}

std::size_t SymTensorHash::operator()(const SymTensor& s) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto x : s.c) {
    h ^= x.bits;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace h3cover
