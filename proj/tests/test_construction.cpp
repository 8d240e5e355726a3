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
#include <vector>

#include "h3cover/construction.hpp"
#include "oracles.hpp"

using namespace h3cover;

namespace {

SymTensor oracle_closed_walk(const Field& F, std::span<const AffineVertex> w) {
  SymTensor s;
  for (std::size_t i = 0; i < w.size(); ++i) s += oracle::ell(F, w[i], w[(i + 1) % w.size()]);
  return s;
}

std::vector<Vector> all_vectors(const Field& F) {
  const unsigned q = static_cast<unsigned>(F.order());
  std::vector<Vector> out;
  for (unsigned code = 0; code < q * q * q * q; ++code) {
    Vector v;
    unsigned x = code;
    for (std::size_t i = 0; i < 4; ++i, x /= q) v.c[i] = Scalar(x % q);
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_SUITE("construction") {

TEST_CASE("voltage against the oracle, symmetric and independent of representatives") {
  for (int k = 1; k <= 4; ++k) {
    const Field F(k);
    const CoverVoltage ell(F);
    Rng rng = sample_rng(51, static_cast<std::uint64_t>(k));
    for (int i = 0; i < 300; ++i) {
      const AffineVertex a = random_affine_vertex(F, rng);
      const AffineVertex b = random_neighbor(F, a, rng);
      const SymTensor v = ell.ell(a, b);
      CHECK(v == oracle::ell(F, a, b));
      CHECK(v == ell.ell(b, a));
      CHECK(v == ell.ell(random_rescale(F, a, rng), random_rescale(F, b, rng)));
      CHECK(ell.ell_u(a, b) == project_n(v));
    }
    const AffineVertex a{e(1), f(1)};
    CHECK_THROWS_AS(ell.ell(a, a), std::invalid_argument);
    CHECK_THROWS_AS(ell.ell(a, AffineVertex{e(2), f(1)}), std::invalid_argument);
  }
}

TEST_CASE("on the projective graph the voltage agrees with the affine one") {
  const Field F(2);
  const ProjectiveGraph g(F);
  const CoverVoltage ell(F);
  const auto on = ell.on(g);
  for (VertexId a = 0; a < g.size(); a += 11)
    g.for_each_neighbor(a, [&](VertexId b) {
      CHECK(on(a, b) == oracle::ell(F, to_affine(g.vertex(a)), to_affine(g.vertex(b))));
    });
}

TEST_CASE("triangles land in the diagonal plus U") {
  for (int k = 1; k <= 3; ++k) {
    const Field F(k);
    const CoverVoltage ell(F);
    Rng rng = sample_rng(52, static_cast<std::uint64_t>(k));
    int seen = 0;
    for (int i = 0; i < 500; ++i) {
      const AffineVertex a = random_affine_vertex(F, rng);
      const AffineVertex b = random_neighbor(F, a, rng);
      const auto c = random_common_neighbor(F, a, b, rng);
      if (!c) continue;
      ++seen;
      const std::array<AffineVertex, 3> w{a, b, *c};
      const SymTensor t = triangle_voltage(ell, a, b, *c);
      CHECK(t == oracle_closed_walk(F, w));
      CHECK(t == closed_walk_voltage(ell, w));
      CHECK(in_w2_plus_u(t));
    }
    CHECK(seen > 100);
  }
  const Field F(1);
  const CoverVoltage ell(F);
  const AffineVertex a{e(1), f(1)}, b{e(2), f(2)};
  CHECK_THROWS_AS(triangle_voltage(ell, a, b, a), std::invalid_argument);
}

TEST_CASE("sampled quadrangles and pentagons land in the diagonal plus U") {
  const Field F(2);
  const VerifyOptions opt{Mode::sample, 2000, 3, kDefaultCap};
  CHECK(verify_quadrangles(F, opt).passed());
  CHECK(verify_pentagons(F, opt).passed());
  CHECK(verify_long_walks(F, 6, 8, opt).passed());
  CHECK_THROWS_AS(verify_long_walks(F, 2, 8, opt), std::invalid_argument);
}

TEST_CASE("special quadrangles against a brute-force dual basis") {
  for (int k : {1, 2}) {
    const Field F(k);
    const auto vecs = all_vectors(F);
    Rng rng = sample_rng(53, static_cast<std::uint64_t>(k));
    for (int i = 0; i < 40; ++i) {
      const auto q = random_special_quadrangle(F, rng);
      REQUIRE(q);
      const auto& w = q->walk;
      CHECK(w[0].v == w[2].v);
      CHECK(oracle_closed_walk(F, w) == q->predicted);
      CHECK(in_w2(q->predicted));
      std::array<Covector, 4> ah;
      std::array<Scalar, 4> al;
      for (std::size_t j = 0; j < 4; ++j) {
        al[j] = oracle::inv(F, oracle::eval(F, w[j].h, w[j].v));
        for (std::size_t c = 0; c < 4; ++c) ah[j].c[c] = oracle::mul(F, al[j], w[j].h.c[c]);
      }
      std::array<Vector, 5> x;
      for (std::size_t j = 0; j < 4; ++j) {
        int found = 0;
        for (const Vector& v : vecs) {
          bool ok = true;
          for (std::size_t r = 0; r < 4; ++r) ok = ok && oracle::eval(F, ah[r], v) == Scalar(r == j ? 1u : 0u);
          if (ok) x[j] = v, ++found;
        }
        REQUIRE(found == 1);
      }
      x[4] = x[0] + x[2];
      const Scalar beta = oracle::mul(F, al[1], oracle::eval(F, w[1].h, w[3].v));
      const Scalar gamma = oracle::mul(F, al[3], oracle::eval(F, w[3].h, w[1].v));
      const Scalar d = oracle::det(F, {ah[0].c, ah[1].c, ah[2].c, ah[3].c});
      CHECK(q->beta == beta);
      CHECK(q->gamma == gamma);
      CHECK(q->d == d);
      auto sq = [&](const Vector& a, const Vector& b) {
        const Bivector t = oracle::wedge(F, a, b);
        return oracle::sym_mul(F, t, t);
      };
      const SymTensor want = oracle::scale(F, d, oracle::scale(F, gamma, sq(x[3], x[4])) +
                                                     oracle::scale(F, beta, sq(x[1], x[4])));
      CHECK(q->predicted == want);
    }
  }
}

TEST_CASE("generator quadrangles") {
  const Field F1(1);
  const std::array<AffineVertex, 4> base{AffineVertex{e(1), f(1)}, AffineVertex{e(3), f(3)},
                                         AffineVertex{e(1), f(1) + f(4)},
                                         AffineVertex{e(3) + e(2), f(3)}};
  CHECK(oracle_closed_walk(F1, base) == square(F1, w(1)));
  for (int k = 1; k <= 4; ++k) {
    const Field F(k);
    const auto cycles = w2_generator_cycles(F);
    CHECK(cycles.size() == 24 * static_cast<std::size_t>(k));
    std::set<std::size_t> slots;
    for (const auto& c : cycles) {
      const SymTensor v = oracle_closed_walk(F, c.walk);
      CHECK(v == c.expected);
      CHECK(in_w2(v));
      for (std::size_t s = 0; s < 6; ++s)
        if (!v.c[sym_index(s, s)].is_zero()) slots.insert(s);
    }
    CHECK(slots.size() == 6);
    const auto r = verify_w2_generators(F);
    CHECK(r.passed());
  }
  const Field F2(2);
  const std::array<Scalar, 1> alpha{F2.generator()};
  for (const auto& c : w2_generator_cycles(F2, alpha)) {
    CHECK(c.lambda == F2.generator());
    CHECK(oracle_closed_walk(F2, c.walk) == c.expected);
  }
}

TEST_CASE("fast and reference cycle spans agree") {
  for (int k : {1, 2}) {
    const ProjectiveGraph g{Field(k)};
    const CycleSpan fast = cycle_span_fast(g);
    const CycleSpan ref = cycle_span_reference(g);
    CHECK(fast.rank_with_u == static_cast<std::size_t>(6 * k + 1));
    CHECK(ref.rank_with_u == fast.rank_with_u);
    CHECK(fast.edges == ref.edges);
    CHECK(fast.edges == g.size() * g.degree() / 2 - (g.size() - 1));
    CHECK(fast.outside_w2_u == 0);
    CHECK(ref.outside_w2_u == 0);
    F2Span a(21 * static_cast<std::size_t>(k)), b(21 * static_cast<std::size_t>(k));
    for (const auto& x : fast.basis) a.insert(x);
    for (const auto& x : ref.basis) CHECK(a.contains(x));
    for (const auto& x : ref.basis) b.insert(x);
    for (const auto& x : fast.basis) CHECK(b.contains(x));
  }
}

TEST_CASE("dense diameter matches BFS") {
  for (int k : {1, 2}) {
    const ProjectiveGraph g{Field(k)};
    CHECK(diameter_dense(g, true) == 2);
    CHECK(diameter_dense(g, false) == 2);
  }
  const ProjectiveGraph g{Field(1)};
  CHECK(diameter(g) == 2);
}

TEST_CASE("A_x, darts and lambda") {
  for (int k = 1; k <= 4; ++k) {
    const Field F(k);
    const CoverVoltage ell(F);
    for (Scalar x : F.elements()) {
      // (e1 + x e2) ^ e3 and f1 ^ f3, by hand
      const SymTensor dart = oracle::ell(F, vertex_u(), vertex_vx(F, x));
      CHECK(dart == monomial(2, 5) + scale(F, x, monomial(4, 5)));
      const SymTensor lam = oracle::ell(F, vertex_vx(F, x), vertex_u()) +
                            oracle::ell(F, vertex_u(), vertex_vx(F, F.zero()));
      CHECK(lam == lambda_ax(ell, x));
      CHECK(lam == scale(F, x, monomial(4, 5)));
      CHECK(cocycle_f(ell, F.zero(), x).is_zero());
      for (Scalar y : F.elements()) {
        CHECK(cocycle_f(ell, x, y) == cocycle_f(ell, y, x));
        CHECK(cocycle_f(ell, x, y) == scale(F, F.mul(x, y), square(F, w(5))));
      }
      CHECK(ax_action_table(F, x) == ax_expected_table(F, x));
    }
    CHECK(verify_dart_and_lambda(F).passed());
  }
  CHECK_THROWS_AS(subgroup_f(Field(2), Scalar(1u)), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_f(Field(2), Scalar(4u)), std::invalid_argument);
  CHECK(verify_cocycle(Field(1)).status == Status::not_applicable);
}

TEST_CASE("order-2 lifts") {
  for (int k : {2, 3, 4}) {
    const Field F(k);
    const Scalar alpha = F.generator();
    const auto sol = order2_solution_space(F, alpha);
    REQUIRE(sol);
    CHECK(sol->kernel.size() == static_cast<std::size_t>(4 * k));
    const Matrix4 a = ax_matrix(F, alpha);
    const SymTensor rhs = scale(F, F.square(alpha), square(F, w(5)));
    const SymTensor p = diag_from_bits(sol->particular, k);
    CHECK(act_s2(F, a, p) + p == rhs);
    for (const Bits& b : sol->kernel) {
      const SymTensor m = diag_from_bits(b, k);
      CHECK(act_s2(F, a, m) == m);
    }
    F2Span s(6 * static_cast<std::size_t>(k));
    for (const Bits& b : subspace_s(F)) s.insert(b);
    CHECK(s.rank() == static_cast<std::size_t>(4 * k));
    for (const Bits& b : sol->kernel) CHECK(s.contains(b));
    const Bits w3 = diag_bits(square(F, w(3)), k);
    CHECK_FALSE(s.contains(w3));
    CHECK(s.contains(sol->particular ^ w3));
    CHECK(verify_order2(F).passed());
  }
}

TEST_CASE("the extension does not split") {
  for (int k : {2, 3, 4}) {
    const Field F(k);
    const auto res = splitting_system(F, F.generator());
    CHECK(res.system.unknowns() == static_cast<std::size_t>(12 * k + 3));
    CHECK(res.system.equations() == static_cast<std::size_t>(63 * k));
    REQUIRE(res.certificate);
    CHECK(certifies(res.system, *res.certificate));
  }
  const Field F(2);
  const auto par = brute_force_lifts(F, F.generator(), true);
  const auto ser = brute_force_lifts(F, F.generator(), false);
  CHECK(par == 0);
  CHECK(ser == 0);
}

TEST_CASE("export round trip") {
  const Field F(1);
  const ExportedGraph base = export_base_graph(F);
  CHECK(base.vertices == 120);
  CHECK(base.edges.size() == 1680);
  const std::string text = format_graph(base, ExportFormat::edgelist);
  const SimpleGraph parsed = parse_edge_list(text);
  CHECK(parsed.size() == 120);
  CHECK(parsed.edges() == base.edges);
  CHECK(text == format_graph(export_base_graph(F), ExportFormat::edgelist));
  const json j = json::parse(format_graph(base, ExportFormat::json));
  CHECK(j["edge_count"] == 1680);
  CHECK(j["vertex_data"].size() == 120);
  CHECK_THROWS_AS(parse_edge_list("0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("# h3cover x field=2 vertices=2 edges=1\n0\n"), std::invalid_argument);
}

TEST_CASE("the cover of H3(F2)") {
  const Field F(1);
  const ExportedGraph c = export_cover(F);
  CHECK(c.vertices == 120 * 64);
  CHECK(c.edges.size() == 1680 * 64);
  const SimpleGraph g = parse_edge_list(format_graph(c, ExportFormat::edgelist));
  std::size_t isolated = 0;
  for (VertexId v = 0; v < g.size(); ++v) isolated += g.neighbors(v).empty();
  CHECK(g.size() - isolated == c.vertices);
  // connected: BFS from a non-isolated vertex reaches every labelled vertex
  const VertexId start = c.edges.front().first;
  std::size_t reached = 0;
  for (int d : bfs(g, start)) reached += d >= 0;
  CHECK(reached == c.vertices);
  const auto r = verify_main_theorem(F, VerifyOptions{Mode::exhaustive, 1000, 1, kDefaultCap});
  CHECK(r.passed());
  CHECK_THROWS_AS(export_cover(Field(2), 10000), std::length_error);
}

}  // TEST_SUITE
