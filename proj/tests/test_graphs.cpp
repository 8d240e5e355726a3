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

#include <algorithm>
#include <set>
#include <stdexcept>

#include "h3cover/graphs.hpp"
#include "oracles.hpp"

using namespace h3cover;

TEST_SUITE("graphs") {

TEST_CASE("vertex counts and degrees against brute-force enumeration") {
  for (int k : {1, 2}) {
    const Field F(k);
    const auto all = oracle::projective_vertices(F);
    const ProjectiveGraph g(F);
    REQUIRE(g.size() == all.size());
    CHECK(ProjectiveGraph::vertex_count(F) == all.size());
    const std::size_t q = static_cast<std::size_t>(F.order());
    CHECK(g.size() == (q * q * q + q * q + q + 1) * q * q * q);
    CHECK(g.degree() == q * q * (q * q + q + 1));
    // the same vertex set, and adjacency agrees with the oracle on every pair
    std::set<ProjVertex> mine, theirs;
    for (VertexId v = 0; v < g.size(); ++v) mine.insert(g.vertex(v));
    for (const auto& a : all) theirs.insert(ProjVertex{a.v, a.h});
    CHECK(mine == theirs);
    if (k == 1) {
      std::size_t edges = 0;
      for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b = 0; b < g.size(); ++b) {
          const bool want = a != b && oracle::adjacent(F, to_affine(g.vertex(a)), to_affine(g.vertex(b)));
          CHECK(g.adjacent(a, b) == want);
          edges += want && a < b;
        }
      CHECK(g.size() == 120);
      CHECK(edges == 1680);
    }
    for (VertexId v = 0; v < g.size(); v += 7) {
      std::size_t n = 0;
      bool ok = true;
      g.for_each_neighbor(v, [&](VertexId u) {
        ++n;
        ok = ok && oracle::adjacent(F, to_affine(g.vertex(v)), to_affine(g.vertex(u)));
      });
      CHECK(ok);
      CHECK(n == g.degree());
    }
  }
}

TEST_CASE("index round trip and projective points") {
  const Field F(2);
  const ProjectiveGraph g(F);
  for (VertexId v = 0; v < g.size(); ++v) {
    CHECK(g.index_of(g.vertex(v)) == v);
    CHECK(g.index_of(to_affine(g.vertex(v))) == v);
  }
  const auto pts = projective_points(F);
  CHECK(pts.size() == 85);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK_FALSE(g.index_of(ProjVertex{e(1), f(2)}).has_value());  // incident pair
}

TEST_CASE("distinct non-adjacent vertices share a neighbor") {
  const Field F(1);
  const ProjectiveGraph g(F);
  for (VertexId a = 0; a < g.size(); ++a)
    for (VertexId b = a + 1; b < g.size(); ++b) {
      std::size_t common = 0;
      g.for_each_neighbor(a, [&](VertexId u) { common += g.adjacent(u, b); });
      if (!g.adjacent(a, b)) CHECK(common > 0);
    }
}

TEST_CASE("diameter two") {
  for (int k : {1, 2}) {
    const ProjectiveGraph g{Field(k)};
    CHECK(diameter(g) == 2);
  }
}

TEST_CASE("neighbor sets determine the reduct class") {
  for (int k : {1, 2}) {
    const Field F(k);
    const auto r = verify_reduct_is_neighborhood_equality(F);
    const std::size_t u = static_cast<std::size_t>(F.order() - 1);
    CHECK(r.ok);
    CHECK(r.mismatches == 0);
    CHECK(r.fiber_size == u * u);
    CHECK(r.classes == r.projective_vertices);
    CHECK(r.affine_vertices == r.projective_vertices * u * u);
  }
}

TEST_CASE("affine graph wraps the projective one") {
  const Field F(2);
  const AffineGraph g(F);
  CHECK(g.size() == g.projective().size() * 9);
  Rng rng = sample_rng(31, 0);
  for (int i = 0; i < 200; ++i) {
    const auto a = static_cast<VertexId>(rng() % g.size());
    const auto b = static_cast<VertexId>(rng() % g.size());
    CHECK(g.adjacent(a, b) == oracle::adjacent(F, g.vertex(a), g.vertex(b)));
    CHECK(g.index_of(g.vertex(a)) == a);
    CHECK(reduct_class(F, g.vertex(a)) == g.projective().vertex(g.reduct(a)));
  }
}

TEST_CASE("coordinate samplers produce what they claim") {
  for (int k = 1; k <= 4; ++k) {
    const Field F(k);
    Rng rng = sample_rng(32, static_cast<std::uint64_t>(k));
    for (int i = 0; i < 300; ++i) {
      const AffineVertex a = random_affine_vertex(F, rng);
      CHECK(is_vertex(F, a));
      const AffineVertex b = random_neighbor(F, a, rng);
      CHECK(is_vertex(F, b));
      CHECK(oracle::adjacent(F, a, b));
      const AffineVertex r = random_rescale(F, b, rng);
      CHECK(reduct_class(F, r) == reduct_class(F, b));
      if (auto c = random_common_neighbor(F, a, b, rng)) {
        CHECK(oracle::adjacent(F, a, *c));
        CHECK(oracle::adjacent(F, b, *c));
      }
    }
  }
}

TEST_CASE("the group acts by automorphisms") {
  const Field F(3);
  Rng rng = sample_rng(33, 0);
  for (int i = 0; i < 200; ++i) {
    const Matrix4 g = random_gl4(F, rng);
    const AffineVertex a = random_affine_vertex(F, rng);
    const AffineVertex b = random_neighbor(F, a, rng);
    const AffineVertex ag = act(F, a, g), bg = act(F, b, g);
    CHECK(is_vertex(F, ag));
    CHECK(oracle::adjacent(F, ag, bg));
    CHECK(oracle::eval(F, ag.h, ag.v) == oracle::eval(F, a.h, a.v));
  }
}

TEST_CASE("SimpleGraph validation") {
  using E = std::pair<VertexId, VertexId>;
  const std::vector<E> path{{0, 1}, {2, 1}, {2, 3}};
  const SimpleGraph g(4, path);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(g.edges() == std::vector<E>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(diameter(g) == 3);
  CHECK(shortest_path(g, 3, 0) == std::vector<VertexId>{3, 2, 1, 0});
  const std::vector<E> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(SimpleGraph(2, dup), std::invalid_argument);
  const std::vector<E> loop{{1, 1}};
  CHECK_THROWS_AS(SimpleGraph(2, loop), std::invalid_argument);
  const std::vector<E> out_of_range{{0, 5}};
  CHECK_THROWS_AS(SimpleGraph(2, out_of_range), std::invalid_argument);
  const std::vector<E> split{{0, 1}};
  CHECK(diameter(SimpleGraph(3, split)) == -1);
}

TEST_CASE("local graph of H3(F2)") {
  const ProjectiveGraph g{Field(1)};
  const LocalGraph l = local_graph(g, 0);
  CHECK(l.vertices.size() == 28);
  for (VertexId i = 0; i < l.vertices.size(); ++i)
    for (VertexId j = 0; j < l.vertices.size(); ++j)
      CHECK(l.graph.adjacent(i, j) == g.adjacent(l.vertices[i], l.vertices[j]));
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(ProjectiveGraph(Field(2), 100), std::length_error);
}

}  // TEST_SUITE
