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

// Voltage assignments with values in an elementary abelian 2-group, written
// additively. A voltage is any callable ell(a, b) on adjacent vertex ids;
// symmetry ell(a, b) = ell(b, a) is the exponent-2 form of
// ell(a, b) = ell(b, a)^-1.
//
// The lift has vertex set V x N with (u, m) ~ (v, n) iff u ~ v and
// ell(u, v) = m + n. Walking a path P from (v0, m) ends at (vn, m + ell(P)).

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "h3cover/graphs.hpp"
#include "h3cover/multilinear.hpp"
#include "h3cover/report.hpp"

namespace h3cover {

template <class V>
concept VoltageValue = std::regular<V> && requires(const V& a, const V& b) {
  { a + b } -> std::convertible_to<V>;
};

template <class L>
using voltage_t = std::remove_cvref_t<std::invoke_result_t<L, VertexId, VertexId>>;

/// Sum of dart voltages along `path`. Throws std::invalid_argument when two
/// consecutive vertices are not adjacent.
template <GraphLike G, class L>
voltage_t<L> path_voltage(const G& g, L&& ell, std::span<const VertexId> path) {
  voltage_t<L> acc{};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.adjacent(path[i], path[i + 1]))
      throw std::invalid_argument("path_voltage: consecutive vertices " + std::to_string(path[i]) +
                                  " and " + std::to_string(path[i + 1]) + " are not adjacent");
    acc = acc + ell(path[i], path[i + 1]);
  }
  return acc;
}

template <class V>
struct LiftVertex {
  VertexId base = 0;
  V tag{};
  friend bool operator==(const LiftVertex&, const LiftVertex&) = default;
};

template <GraphLike G, class L, class V>
bool lift_adjacent(const G& g, L&& ell, const LiftVertex<V>& a, const LiftVertex<V>& b) {
  return g.adjacent(a.base, b.base) && ell(a.base, b.base) == a.tag + b.tag;
}

/// Spanning tree by BFS from `root`, parents chosen as the first discoverer.
struct SpanningTree {
  VertexId root = 0;
  std::vector<VertexId> parent;  // kNoVertex for the root and unreachable vertices
  std::vector<VertexId> order;   // BFS order, root first
  bool spanning = false;
};

template <GraphLike G>
SpanningTree bfs_tree(const G& g, VertexId root) {
  SpanningTree t;
  t.root = root;
  t.parent.assign(g.size(), kNoVertex);
  std::vector<bool> seen(g.size(), false);
  seen[root] = true;
  t.order.push_back(root);
  // Stops expanding once every vertex has been reached.
  for (std::size_t head = 0; head < t.order.size() && t.order.size() < g.size(); ++head) {
    const VertexId v = t.order[head];
    g.for_each_neighbor(v, [&](VertexId u) {
      if (seen[u]) return;
      seen[u] = true;
      t.parent[u] = v;
      t.order.push_back(u);
    });
  }
  t.spanning = t.order.size() == g.size();
  return t;
}

/// Voltage of the tree path from the root to every vertex.
template <GraphLike G, class L>
std::vector<voltage_t<L>> tree_voltages(const G& /*g*/, L&& ell, const SpanningTree& t) {
  std::vector<voltage_t<L>> out(t.parent.size());
  for (std::size_t i = 1; i < t.order.size(); ++i) {
    const VertexId v = t.order[i];
    out[v] = out[t.parent[v]] + ell(t.parent[v], v);
  }
  return out;
}

/// For every non-tree edge {a, b}: t(a) + ell(a, b) + t(b), the voltage of the
/// closed walk root -> a -> b -> root. In an abelian group these generate the
/// same subgroup as all closed walks at the root. (For a nonabelian voltage
/// group the relevant subgroup would be the normal closure; here every value
/// group is abelian and the plain span is the same thing.)
/// Throws std::invalid_argument when the graph is disconnected.
template <GraphLike G, class L>
std::vector<voltage_t<L>> fundamental_cycle_generators(const G& g, L&& ell, VertexId root) {
  const SpanningTree t = bfs_tree(g, root);
  if (!t.spanning) throw std::invalid_argument("fundamental_cycle_generators: graph is disconnected");
  const auto tv = tree_voltages(g, ell, t);
  std::vector<voltage_t<L>> out;
  for (std::size_t a = 0; a < g.size(); ++a)
    g.for_each_neighbor(static_cast<VertexId>(a), [&](VertexId b) {
      if (b <= a) return;
      if (t.parent[b] == a || t.parent[a] == b) return;
      out.push_back(tv[a] + ell(static_cast<VertexId>(a), b) + tv[b]);
    });
  return out;
}

/// The connected component of one lift vertex, built by BFS.
template <class V, class Hash>
struct LiftComponent {
  std::vector<LiftVertex<V>> vertices;                       // BFS order
  std::vector<std::unordered_map<V, VertexId, Hash>> fibers;  // per base vertex: tag -> id
  SimpleGraph graph;                                          // on component ids

  std::size_t size() const { return vertices.size(); }
  std::optional<VertexId> find(VertexId base, const V& tag) const {
    auto it = fibers[base].find(tag);
    if (it == fibers[base].end()) return std::nullopt;
    return it->second;
  }
};

/// Throws std::length_error as soon as the component exceeds `cap` vertices.
template <class Hash, GraphLike G, class L>
LiftComponent<voltage_t<L>, Hash> component_of(const G& g, L&& ell,
                                               const LiftVertex<voltage_t<L>>& start,
                                               std::size_t cap = kDefaultCap) {
  using V = voltage_t<L>;
  LiftComponent<V, Hash> c;
  c.fibers.resize(g.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto visit = [&](const LiftVertex<V>& x) {
    auto [it, fresh] = c.fibers[x.base].try_emplace(x.tag, static_cast<VertexId>(c.vertices.size()));
    if (fresh) {
      if (c.vertices.size() >= cap)
        throw std::length_error("component_of: lift component exceeds the cap of " +
                                std::to_string(cap) + " vertices");
      c.vertices.push_back(x);
    }
    return it->second;
  };
  visit(start);
  for (std::size_t head = 0; head < c.vertices.size(); ++head) {
    const LiftVertex<V> x = c.vertices[head];
    g.for_each_neighbor(x.base, [&](VertexId u) {
      const VertexId y = visit(LiftVertex<V>{u, x.tag + ell(x.base, u)});
      if (head < y) edges.emplace_back(static_cast<VertexId>(head), y);
    });
  }
  c.graph = SimpleGraph(c.vertices.size(), edges);
  return c;
}

struct LocalIsoResult {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<VertexId> failing;  // component ids, first few
};

/// For each listed component vertex x = (u, m): projection maps the lift
/// neighbors of x bijectively onto the neighbors of u, and two lift
/// neighbors are adjacent iff their projections are.
template <GraphLike G, class V, class Hash>
LocalIsoResult verify_local_isomorphism(const G& g, const LiftComponent<V, Hash>& c,
                                        std::span<const VertexId> which) {
  LocalIsoResult r;
  for (VertexId x : which) {
    ++r.checked;
    const auto nb = c.graph.neighbors(x);
    std::vector<VertexId> proj;
    proj.reserve(nb.size());
    for (VertexId y : nb) proj.push_back(c.vertices[y].base);
    std::vector<VertexId> base_nb;
    g.for_each_neighbor(c.vertices[x].base, [&](VertexId u) { base_nb.push_back(u); });
    std::vector<VertexId> sorted = proj;
    std::sort(sorted.begin(), sorted.end());
    std::sort(base_nb.begin(), base_nb.end());
    bool ok = sorted == base_nb;
    for (std::size_t i = 0; ok && i < nb.size(); ++i)
      for (std::size_t j = i + 1; ok && j < nb.size(); ++j)
        ok = c.graph.adjacent(nb[i], nb[j]) == g.adjacent(proj[i], proj[j]);
    if (!ok) {
      ++r.failures;
      if (r.failing.size() < 8) r.failing.push_back(x);
    }
  }
  return r;
}

/// Voltage of the shortest path from `from` to `to` (smallest-id tie-break).
template <GraphLike G, class L>
voltage_t<L> lambda_of(const G& g, L&& ell, VertexId from, VertexId to) {
  const auto path = shortest_path(g, from, to);
  if (path.empty()) throw std::invalid_argument("lambda_of: vertices in different components");
  return path_voltage(g, ell, std::span<const VertexId>(path));
}

// The extension G x| N acting on lifts with N = S_2(W)/<U>.

/// (g, n) with (g, k)(h, l) = (gh, k^h + l).
struct ExtensionElement {
  Matrix4 g = Matrix4::identity();
  NElement n{};
  friend bool operator==(const ExtensionElement&, const ExtensionElement&) = default;
};

ExtensionElement compose(const Field& F, const ExtensionElement& a, const ExtensionElement& b);

/// (v, n)^(g, k) = (v^g, n^g + k) on the projective graph. Requires det g = 1
/// (std::domain_error otherwise).
LiftVertex<NElement> act_extension(const ProjectiveGraph& g, const LiftVertex<NElement>& x,
                                   const ExtensionElement& e);

// Checks on voltages given as functions of affine vertices,
// ell(AffineVertex, AffineVertex) -> SymTensor or NElement.

inline SymTensor act_value(const S2Action& g, const SymTensor& s) { return g.apply(s); }
inline NElement act_value(const S2Action& g, const NElement& n) { return project_n(g.apply(n.rep())); }

/// ell(w, u) = ell(w, v) whenever u and v have the same reduct class and
/// v ~ w. Exhaustive mode walks every dart (w, v) of the affine graph and
/// every rescaling u of v; sample mode draws (w, v, u) by coordinates.
template <class L>
Report check_reductive(const Field& F, L&& ell, const VerifyOptions& opt) {
  Report r;
  r.check = "reductive";
  r.field = F.order();
  r.mode = opt.mode;
  auto witness = [](const AffineVertex& w, const AffineVertex& v, const AffineVertex& u,
                    const auto& a, const auto& b) {
    return json{{"w", to_json(w)}, {"v", to_json(v)}, {"u", to_json(u)},
                {"ell_wv", to_json(a)}, {"ell_wu", to_json(b)}};
  };
  if (opt.mode == Mode::exhaustive) {
    const AffineGraph g(F, opt.cap);
    const auto n = static_cast<std::int64_t>(g.size());
    std::vector<IndexedWitness> found;
    std::uint64_t count = 0;
#pragma omp parallel reduction(+ : count)
    {
      std::vector<IndexedWitness> local;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::int64_t i = 0; i < n; ++i) {
        const auto wi = static_cast<VertexId>(i);
        const AffineVertex w = g.vertex(wi);
        g.projective().for_each_neighbor(g.reduct(wi), [&](VertexId pv) {
          const auto first = static_cast<VertexId>(pv * g.scalings());
          const AffineVertex v = g.vertex(first);
          const auto base = ell(w, v);
          for (std::size_t s = 1; s < g.scalings(); ++s) {
            const AffineVertex u = g.vertex(static_cast<VertexId>(first + s));
            const auto other = ell(w, u);
            ++count;
            if (!(other == base))
              local.push_back({static_cast<std::uint64_t>(i), witness(w, v, u, base, other)});
          }
          ++count;
        });
      }
#pragma omp critical(h3cover_reductive)
      for (auto& x : local) found.push_back(std::move(x));
    }
    r.samples = count;
    r.violations_from(std::move(found));
  } else {
    r.samples = opt.samples;
    r.violations_from(run_samples(opt.samples, opt.seed, [&](std::uint64_t, Rng& rng) -> std::optional<json> {
      const AffineVertex w = random_affine_vertex(F, rng);
      const AffineVertex v = random_neighbor(F, w, rng);
      const AffineVertex u = random_rescale(F, v, rng);
      const auto a = ell(w, v);
      const auto b = ell(w, u);
      if (a == b) return std::nullopt;
      return witness(w, v, u, a, b);
    }));
  }
  return r.finish();
}

/// ell(a^g, b^g) = ell(a, b)^g for every g in gs. Exhaustive mode pairs every
/// dart of the affine graph with every g; sample mode pairs sample i with
/// gs[i % gs.size()]. Every g must have det 1 when values live in N.
template <class L>
Report check_equivariance(const Field& F, L&& ell, std::span<const Matrix4> gs,
                          const VerifyOptions& opt) {
  Report r;
  r.check = "equivariance";
  r.field = F.order();
  r.mode = opt.mode;
  r.details["matrices"] = gs.size();
  if (gs.empty()) return r.finish();
  std::vector<S2Action> actions;
  actions.reserve(gs.size());
  for (const auto& g : gs) actions.emplace_back(F, g);
  auto test = [&](const AffineVertex& a, const AffineVertex& b,
                  std::size_t gi) -> std::optional<json> {
    const auto lhs = ell(act(F, a, gs[gi]), act(F, b, gs[gi]));
    const auto rhs = act_value(actions[gi], ell(a, b));
    if (lhs == rhs) return std::nullopt;
    return json{{"a", to_json(a)}, {"b", to_json(b)}, {"matrix", gi},
                {"ell_image", to_json(lhs)}, {"image_ell", to_json(rhs)}};
  };
  if (opt.mode == Mode::exhaustive) {
    const AffineGraph g(F, opt.cap);
    const std::uint64_t darts = g.size() * g.projective().degree() * g.scalings();
    r.samples = darts * gs.size();
    const auto n = static_cast<std::int64_t>(g.size());
    std::vector<IndexedWitness> found;
#pragma omp parallel
    {
      std::vector<IndexedWitness> local;
#pragma omp for schedule(dynamic, 4) nowait
      for (std::int64_t i = 0; i < n; ++i) {
        const AffineVertex a = g.vertex(static_cast<VertexId>(i));
        g.for_each_neighbor(static_cast<VertexId>(i), [&](VertexId j) {
          const AffineVertex b = g.vertex(j);
          for (std::size_t gi = 0; gi < gs.size(); ++gi)
            if (auto w = test(a, b, gi)) local.push_back({static_cast<std::uint64_t>(i), std::move(*w)});
        });
      }
#pragma omp critical(h3cover_equivariance)
      for (auto& x : local) found.push_back(std::move(x));
    }
    r.violations_from(std::move(found));
  } else {
    r.samples = opt.samples;
    r.violations_from(run_samples(opt.samples, opt.seed, [&](std::uint64_t i, Rng& rng) {
      const AffineVertex a = random_affine_vertex(F, rng);
      const AffineVertex b = random_neighbor(F, a, rng);
      return test(a, b, static_cast<std::size_t>(i % gs.size()));
    }));
  }
  return r.finish();
}

/// With lambda(g) the voltage of the shortest path from v^g to v, checks that
/// lambda(gh) + lambda(g)^h + lambda(h) lies in M (given as a predicate) for
/// every ordered pair from gs. `ell` is a voltage on projective vertex ids.
template <class L, class InM>
Report stabilizer_closure_check(const ProjectiveGraph& g, L&& ell, VertexId v,
                                std::span<const Matrix4> gs, InM&& in_m) {
  const Field& F = g.field();
  Report r;
  r.check = "stabilizer-closure";
  r.field = F.order();
  r.mode = Mode::exhaustive;
  auto lambda = [&](const Matrix4& m) {
    const VertexId image = *g.index_of(act(F, g.vertex(v), m));
    return lambda_of(g, ell, image, v);
  };
  std::vector<voltage_t<L>> lam;
  for (const auto& m : gs) lam.push_back(lambda(m));
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j) {
      ++r.samples;
      const S2Action h(F, gs[j]);
      const auto c = lambda(mul(F, gs[i], gs[j])) + act_value(h, lam[i]) + lam[j];
      if (!in_m(c)) r.violation(json{{"g", i}, {"h", j}, {"cocycle", to_json(c)}});
    }
  return r.finish();
}

}  // namespace h3cover
