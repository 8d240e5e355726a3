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
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "h3cover/multilinear.hpp"
#include "oracles.hpp"

using namespace h3cover;

namespace {

Vector random_vector(const Field& F, Rng& rng) {
  Vector v;
  for (auto& x : v.c) x = random_scalar(F, rng);
  return v;
}

Covector random_covector(const Field& F, Rng& rng) {
  Covector h;
  for (auto& x : h.c) x = random_scalar(F, rng);
  return h;
}

SymTensor random_tensor(const Field& F, Rng& rng) {
  SymTensor s;
  for (auto& x : s.c) x = random_scalar(F, rng);
  return s;
}

}  // namespace

TEST_SUITE("multilinear") {

TEST_CASE("monomial indexing is lexicographic") {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a; b < 6; ++b, ++idx) {
      CHECK(sym_index(a, b) == idx);
      CHECK(sym_monomial(idx) == std::pair{a, b});
    }
  CHECK(idx == kSymDim);
  for (std::size_t s = 0; s < 6; ++s) {
    const auto [i, j] = oracle::kPairs[s];
    CHECK(wedge_slot(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == s);
  }
}

TEST_CASE("wedge and symmetric product against the oracle") {
  for (int k = 1; k <= 4; ++k) {
    const Field F(k);
    Rng rng = sample_rng(21, static_cast<std::uint64_t>(k));
    for (int i = 0; i < 200; ++i) {
      const Vector a = random_vector(F, rng), b = random_vector(F, rng);
      const Covector g = random_covector(F, rng), h = random_covector(F, rng);
      const Bivector ab = wedge(F, a, b);
      CHECK(ab == oracle::wedge(F, a, b));
      CHECK(wedge(F, a, a).is_zero());
      CHECK(wedge(F, b, a) == ab);
      CHECK(phi(wedge(F, g, h)) == oracle::phi_of(F, g, h));
      const Bivector cd = wedge(F, random_vector(F, rng), random_vector(F, rng));
      CHECK(sym_mul(F, ab, cd) == oracle::sym_mul(F, ab, cd));
      CHECK(sym_mul(F, ab, cd) == sym_mul(F, cd, ab));
    }
  }
}

TEST_CASE("phi basis table") {
  const Field F(2);
  CHECK(phi(wedge(F, f(3), f(4))) == w(1));
  CHECK(phi(wedge(F, f(2), f(4))) == w(2));
  CHECK(phi(wedge(F, f(2), f(3))) == w(3));
  CHECK(phi(wedge(F, f(1), f(4))) == w(4));
  CHECK(phi(wedge(F, f(1), f(3))) == w(5));
  CHECK(phi(wedge(F, f(1), f(2))) == w(6));
  for (int k = 1; k <= 4; ++k) CHECK(phi_consistency_check(Field(k)));
}

TEST_CASE("the pairing through phi equals the determinant pairing") {
  const Field F(3);
  Rng rng = sample_rng(22, 0);
  for (int i = 0; i < 300; ++i) {
    const Vector v1 = random_vector(F, rng), v2 = random_vector(F, rng);
    const Vector x1 = random_vector(F, rng), x2 = random_vector(F, rng);
    CHECK(wedge_pairing(F, wedge(F, v1, v2), wedge(F, x1, x2)) ==
          oracle::det(F, {v1.c, v2.c, x1.c, x2.c}));
    CHECK(wedge4(F, v1, v2, x1, x2) == oracle::det(F, {v1.c, v2.c, x1.c, x2.c}));
    const Covector h1 = random_covector(F, rng), h2 = random_covector(F, rng);
    const Scalar direct = oracle::mul(F, oracle::eval(F, h1, v1), oracle::eval(F, h2, v2)) +
                          oracle::mul(F, oracle::eval(F, h1, v2), oracle::eval(F, h2, v1));
    CHECK(dual_pairing(F, wedge(F, h1, h2), wedge(F, v1, v2)) == direct);
    CHECK(wedge_pairing(F, phi(wedge(F, h1, h2)), wedge(F, v1, v2)) == direct);
  }
}

TEST_CASE("squares are diagonal and additive") {
  const Field F(4);
  Rng rng = sample_rng(23, 0);
  for (int i = 0; i < 200; ++i) {
    const Bivector a = wedge(F, random_vector(F, rng), random_vector(F, rng)) +
                       wedge(F, random_vector(F, rng), random_vector(F, rng));
    const Bivector b = wedge(F, random_vector(F, rng), random_vector(F, rng));
    CHECK(in_w2(square(F, a)));
    CHECK(square(F, a + b) == square(F, a) + square(F, b));
    for (std::size_t s = 0; s < 6; ++s) CHECK(square(F, a).c[sym_index(s, s)] == F.square(a.c[s]));
  }
}

TEST_CASE("U in coordinates and its invariance") {
  const SymTensor u = big_u();
  std::set<std::size_t> support;
  for (std::size_t i = 0; i < kSymDim; ++i)
    if (!u.c[i].is_zero()) support.insert(i);
  CHECK(support == std::set<std::size_t>{sym_index(0, 5), sym_index(1, 4), sym_index(2, 3)});
  CHECK(in_w2_plus_u(u));
  CHECK_FALSE(in_w2(u));
  for (int k = 1; k <= 4; ++k) {
    const Field F(k);
    CHECK(big_u(F) == u);
    Rng rng = sample_rng(24, static_cast<std::uint64_t>(k));
    for (int i = 0; i < 100; ++i) {
      const Matrix4 g = random_sl4(F, rng);
      CHECK(act_s2(F, g, u) == u);
      const Matrix4 h = random_gl4(F, rng);
      CHECK(act_s2(F, h, u) == scale(F, det(F, h), u));
      // delta of the rows of g, a unimodular basis
      CHECK(delta(F, Vector{g.m[0]}, Vector{g.m[1]}, Vector{g.m[2]}, Vector{g.m[3]}) == u);
    }
  }
}

TEST_CASE("induced action against transformed vectors") {
  const Field F(3);
  Rng rng = sample_rng(25, 0);
  for (int i = 0; i < 200; ++i) {
    const Matrix4 g = random_gl4(F, rng);
    const Matrix4 h = random_gl4(F, rng);
    std::array<Vector, 4> v;
    for (auto& x : v) x = random_vector(F, rng);
    const SymTensor t = oracle::sym_mul(F, oracle::wedge(F, v[0], v[1]), oracle::wedge(F, v[2], v[3]));
    std::array<Vector, 4> vg;
    for (std::size_t j = 0; j < 4; ++j) vg[j] = apply(F, v[j], g);
    const SymTensor tg = oracle::sym_mul(F, oracle::wedge(F, vg[0], vg[1]), oracle::wedge(F, vg[2], vg[3]));
    CHECK(act_s2(F, g, t) == tg);
    CHECK(act_w(F, g, wedge(F, v[0], v[1])) == wedge(F, vg[0], vg[1]));
    // right action: s^(gh) = (s^g)^h
    const SymTensor s = random_tensor(F, rng);
    CHECK(act_s2(F, mul(F, g, h), s) == act_s2(F, h, act_s2(F, g, s)));
    const S2Action ag(F, g);
    CHECK(ag.apply(s) == act_s2(F, g, s));
  }
}

TEST_CASE("N = S2(W) / <U>") {
  const Field F(2);
  Rng rng = sample_rng(26, 0);
  for (int i = 0; i < 200; ++i) {
    const SymTensor s = random_tensor(F, rng), t = random_tensor(F, rng);
    CHECK(project_n(s) == project_n(s + big_u()));
    CHECK(project_n(s) + project_n(t) == project_n(s + t));
    const auto both = lift_n(project_n(s));
    CHECK(((both[0] == s) || (both[1] == s)));
    CHECK(both[0] < both[1]);
    CHECK((project_n(s).rep().c[sym_index(0, 5)].bits & 1u) == 0);
  }
  CHECK(project_n(big_u()).is_zero());
  CHECK_FALSE(project_n(scale(F, Scalar(2u), big_u())).is_zero());  // only the F2 multiples die
  Matrix4 d = Matrix4::diagonal(Scalar(2u), F.one(), F.one(), F.one());
  CHECK_THROWS_AS(act_n(F, d, project_n(big_u())), std::domain_error);
}

TEST_CASE("restriction of scalars round trips") {
  const Field F(4);
  Rng rng = sample_rng(27, 0);
  for (int i = 0; i < 100; ++i) {
    const SymTensor s = random_tensor(F, rng);
    const Bits b = to_bits(s, 4);
    CHECK(b.size() == 84);
    CHECK(sym_from_bits(b, 4) == s);
    const Bivector a = wedge(F, random_vector(F, rng), random_vector(F, rng));
    CHECK(bivector_from_bits(to_bits(a, 4), 4) == a);
  }
  // coordinate i, bit j -> i * k + j
  const Bits b = to_bits(scale(F, Scalar(4u), monomial(1, 2)), 4);
  CHECK(b.count() == 1);
  CHECK(b.test(1 * 4 + 2));
}

}  // TEST_SUITE
