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
#pragma once

// Slow, self-contained reimplementations used as test oracles. Nothing here
// calls into the library beyond the plain data types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "h3cover/graphs.hpp"
#include "h3cover/multilinear.hpp"

namespace oracle {

using namespace h3cover;

// Shift-and-add multiplication, reducing after every shift.
inline unsigned gf_mul(unsigned a, unsigned b, int k) {
  static constexpr unsigned kPoly[5] = {0, 0b11, 0b111, 0b1011, 0b10011};
  if (k == 1) return a & b & 1u;
  unsigned acc = 0;
  for (int i = 0; i < k; ++i) {
    if (b >> i & 1u) acc ^= a;
    a <<= 1;
    if (a >> k & 1u) a ^= kPoly[k];
  }
  return acc;
}

inline Scalar mul(const Field& F, Scalar a, Scalar b) { return Scalar(gf_mul(a.bits, b.bits, F.degree())); }

inline Scalar inv(const Field& F, Scalar a) {
  for (unsigned b = 1; b < static_cast<unsigned>(F.order()); ++b)
    if (gf_mul(a.bits, b, F.degree()) == 1) return Scalar(b);
  return Scalar(0u);
}

inline Scalar eval(const Field& F, const Covector& h, const Vector& v) {
  Scalar s;
  for (std::size_t i = 0; i < 4; ++i) s += oracle::mul(F, h.c[i], v.c[i]);
  return s;
}

// Leibniz expansion; signs vanish in characteristic 2.
inline Scalar det(const Field& F, const std::array<std::array<Scalar, 4>, 4>& m) {
  std::array<int, 4> p{0, 1, 2, 3};
  Scalar s;
  do {
    Scalar t(1u);
    for (std::size_t r = 0; r < 4; ++r) t = oracle::mul(F, t, m[r][static_cast<std::size_t>(p[r])]);
    s += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

inline constexpr std::array<std::pair<int, int>, 6> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

template <class V>
std::array<Scalar, 6> wedge_coords(const Field& F, const V& a, const V& b) {
  std::array<Scalar, 6> out;
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [i, j] = kPairs[s];
    out[s] = oracle::mul(F, a.c[static_cast<std::size_t>(i)], b.c[static_cast<std::size_t>(j)]) +
             oracle::mul(F, a.c[static_cast<std::size_t>(j)], b.c[static_cast<std::size_t>(i)]);
  }
  return out;
}

inline Bivector wedge(const Field& F, const Vector& a, const Vector& b) {
  return {oracle::wedge_coords(F, a, b)};
}

// (h1 ^ h2)^phi: the coefficient at e_i ^ e_j is the pairing of h1 ^ h2 with
// the complementary e_k ^ e_l, since e_i ^ e_j ^ e_k ^ e_l = +-1.
inline Bivector phi_of(const Field& F, const Covector& h1, const Covector& h2) {
  Bivector out;
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [i, j] = kPairs[s];
    int k = -1, l = -1;
    for (int t = 0; t < 4; ++t)
      if (t != i && t != j) (k < 0 ? k : l) = t;
    const auto K = static_cast<std::size_t>(k), L = static_cast<std::size_t>(l);
    out.c[s] = oracle::mul(F, h1.c[K], h2.c[L]) + oracle::mul(F, h1.c[L], h2.c[K]);
  }
  return out;
}

// Monomials enumerated in lexicographic order of (a, b), a <= b.
inline SymTensor sym_mul(const Field& F, const Bivector& x, const Bivector& y) {
  SymTensor out;
  std::size_t idx = 0;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a; b < 6; ++b, ++idx)
      out.c[idx] = a == b ? oracle::mul(F, x.c[a], y.c[a])
                          : oracle::mul(F, x.c[a], y.c[b]) + oracle::mul(F, x.c[b], y.c[a]);
  return out;
}

inline SymTensor scale(const Field& F, Scalar s, SymTensor t) {
  for (auto& c : t.c) c = oracle::mul(F, s, c);
  return t;
}

inline SymTensor ell(const Field& F, const AffineVertex& a, const AffineVertex& b) {
  const Scalar c =
      oracle::mul(F, oracle::inv(F, oracle::eval(F, a.h, a.v)), oracle::inv(F, oracle::eval(F, b.h, b.v)));
  return oracle::scale(F, c, oracle::sym_mul(F, oracle::wedge(F, a.v, b.v), oracle::phi_of(F, a.h, b.h)));
}

// Every (v, h) with h(v) != 0, v and h each normalized (first nonzero 1).
inline std::vector<AffineVertex> projective_vertices(const Field& F) {
  const unsigned q = static_cast<unsigned>(F.order());
  std::vector<std::array<Scalar, 4>> pts;
  for (unsigned code = 1; code < q * q * q * q; ++code) {
    std::array<Scalar, 4> c;
    unsigned x = code;
    for (std::size_t i = 0; i < 4; ++i, x /= q) c[i] = Scalar(x % q);
    const auto first = std::find_if(c.begin(), c.end(), [](Scalar s) { return !s.is_zero(); });
    if (first->bits == 1) pts.push_back(c);
  }
  std::vector<AffineVertex> out;
  for (const auto& p : pts)
    for (const auto& h : pts)
      if (!oracle::eval(F, Covector{h}, Vector{p}).is_zero()) out.push_back({Vector{p}, Covector{h}});
  return out;
}

inline bool adjacent(const Field& F, const AffineVertex& a, const AffineVertex& b) {
  return oracle::eval(F, a.h, b.v).is_zero() && oracle::eval(F, b.h, a.v).is_zero();
}

}  // namespace oracle
