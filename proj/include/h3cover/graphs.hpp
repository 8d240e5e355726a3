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

// The non-incident point-hyperplane graph H3(F) (projective) and its affine
// version on pairs (v, h) with h(v) != 0. Both are adjacency-symmetric and
// irreflexive: (v, h) ~ (w, g) iff h(w) = 0 and g(v) = 0.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "h3cover/field.hpp"
#include "h3cover/linalg.hpp"

namespace h3cover {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr std::size_t kDefaultCap = 10'000'000;

struct AffineVertex {
  Vector v;
  Covector h;
  friend bool operator==(const AffineVertex&, const AffineVertex&) = default;
  friend auto operator<=>(const AffineVertex&, const AffineVertex&) = default;
};

/// Point and hyperplane, each normalized (first nonzero coordinate 1).
struct ProjVertex {
  Vector v;
  Covector h;
  friend bool operator==(const ProjVertex&, const ProjVertex&) = default;
  friend auto operator<=>(const ProjVertex&, const ProjVertex&) = default;
};

inline AffineVertex to_affine(const ProjVertex& p) { return {p.v, p.h}; }

bool is_vertex(const Field& F, const AffineVertex& a);
bool adjacent(const Field& F, const AffineVertex& a, const AffineVertex& b);
bool adjacent(const Field& F, const ProjVertex& a, const ProjVertex& b);

/// Normalizes v and h independently.
ProjVertex reduct_class(const Field& F, const AffineVertex& a);

/// (v, h)^g = (v g, h (g^-1)^T).
AffineVertex act(const Field& F, const AffineVertex& a, const Matrix4& g);
ProjVertex act(const Field& F, const ProjVertex& a, const Matrix4& g);

/// Normalized nonzero vectors of F^4 in lexicographic coordinate order.
std::vector<Vector> projective_points(const Field& F);

// Coordinate sampling on the affine graph; needs no enumeration, so it works
// for every field.

/// Uniform over all (v, h) with h(v) != 0.
AffineVertex random_affine_vertex(const Field& F, Rng& rng);
/// Uniform over the neighbors of a.
AffineVertex random_neighbor(const Field& F, const AffineVertex& a, Rng& rng);
/// Uniform over the common neighbors of a and b; nullopt when none exists.
std::optional<AffineVertex> random_common_neighbor(const Field& F, const AffineVertex& a,
                                                   const AffineVertex& b, Rng& rng);
/// (lambda v, mu h) for uniform units lambda, mu.
AffineVertex random_rescale(const Field& F, const AffineVertex& a, Rng& rng);

template <class G>
concept GraphLike = requires(const G& g, VertexId v) {
  { g.size() } -> std::convertible_to<std::size_t>;
  { g.adjacent(v, v) } -> std::same_as<bool>;
  g.for_each_neighbor(v, [](VertexId) {});
};

/// Immutable undirected graph in CSR form with sorted neighbor lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Edges may be listed in either orientation; duplicates and loops are
  /// rejected with std::invalid_argument.
  SimpleGraph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  std::span<const VertexId> neighbors(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;
  template <class Fn>
  void for_each_neighbor(VertexId v, Fn&& fn) const {
    for (VertexId u : neighbors(v)) fn(u);
  }
  /// Each edge once as (a, b) with a < b, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

/// H3(F) with vertices ordered lexicographically by (point, hyperplane).
///
/// Neighbors are generated on demand from point/hyperplane incidence lists;
/// for |F| <= 4 a dense adjacency bit matrix is also kept.
class ProjectiveGraph {
 public:
  /// Throws std::length_error when the vertex count exceeds `cap`.
  explicit ProjectiveGraph(const Field& F, std::size_t cap = kDefaultCap);

  /// Vertex count for F without building anything: |P| q^3.
  static std::size_t vertex_count(const Field& F);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return vertex_point_.size(); }
  std::size_t point_count() const noexcept { return points_.size(); }
  /// Common degree (q^2 + q + 1) q^2.
  std::size_t degree() const noexcept { return degree_; }

  ProjVertex vertex(VertexId v) const;
  std::uint32_t point_of(VertexId v) const { return vertex_point_[v]; }
  std::uint32_t hyperplane_of(VertexId v) const { return vertex_hyper_[v]; }
  const Vector& point(std::uint32_t i) const { return points_[i]; }
  Covector hyperplane(std::uint32_t i) const { return Covector{points_[i].c}; }

  /// Index of a projective point given by any nonzero representative.
  std::optional<std::uint32_t> point_index(const Vector& v) const;
  std::optional<std::uint32_t> hyperplane_index(const Covector& h) const;
  /// kNoVertex when the point lies on the hyperplane.
  VertexId index_of(std::uint32_t point, std::uint32_t hyper) const {
    return index_[static_cast<std::size_t>(point) * points_.size() + hyper];
  }
  /// Accepts unnormalized representatives.
  std::optional<VertexId> index_of(const ProjVertex& p) const;
  std::optional<VertexId> index_of(const AffineVertex& a) const;

  /// hyperplane(h) evaluated at point(p).
  Scalar pairing(std::uint32_t p, std::uint32_t h) const {
    return pairing_[static_cast<std::size_t>(p) * points_.size() + h];
  }
  std::span<const std::uint32_t> points_on(std::uint32_t h) const { return points_on_[h]; }
  std::span<const std::uint32_t> hyperplanes_through(std::uint32_t p) const {
    return hypers_through_[p];
  }

  /// Neighbors in increasing id order.
  template <class Fn>
  void for_each_neighbor(VertexId v, Fn&& fn) const {
    const std::uint32_t x = vertex_point_[v];
    const std::uint32_t X = vertex_hyper_[v];
    for (std::uint32_t p : points_on_[X])
      for (std::uint32_t H : hypers_through_[x]) {
        const VertexId u = index_of(p, H);
        if (u != kNoVertex) fn(u);
      }
  }
  bool adjacent(VertexId a, VertexId b) const;

  bool has_dense_adjacency() const noexcept { return !dense_.empty(); }
  std::size_t dense_words() const noexcept { return words_; }
  /// Row of the dense adjacency matrix; requires has_dense_adjacency().
  std::span<const std::uint64_t> dense_row(VertexId v) const {
    return {dense_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

 private:
  Field field_;
  std::vector<Vector> points_;
  std::vector<std::int32_t> point_lookup_;  // packed coordinates -> point index
  std::vector<std::vector<std::uint32_t>> points_on_;
  std::vector<std::vector<std::uint32_t>> hypers_through_;
  std::vector<Scalar> pairing_;
  std::vector<VertexId> index_;
  std::vector<std::uint32_t> vertex_point_;
  std::vector<std::uint32_t> vertex_hyper_;
  std::size_t degree_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> dense_;
};

/// The affine graph on pairs (v, h), h(v) != 0, enumerated as
/// (projective vertex, lambda, mu) -> (lambda v^, mu h^) for units lambda, mu.
class AffineGraph {
 public:
  explicit AffineGraph(const Field& F, std::size_t cap = kDefaultCap);

  const Field& field() const noexcept { return base_.field(); }
  const ProjectiveGraph& projective() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size() * scalings_; }
  /// (q - 1)^2 pairs share a projective vertex.
  std::size_t scalings() const noexcept { return scalings_; }

  AffineVertex vertex(VertexId v) const;
  /// The projective vertex obtained by normalizing.
  VertexId reduct(VertexId v) const { return static_cast<VertexId>(v / scalings_); }
  std::optional<VertexId> index_of(const AffineVertex& a) const;

  template <class Fn>
  void for_each_neighbor(VertexId v, Fn&& fn) const {
    base_.for_each_neighbor(reduct(v), [&](VertexId u) {
      const auto first = static_cast<VertexId>(u * scalings_);
      for (std::size_t s = 0; s < scalings_; ++s) fn(static_cast<VertexId>(first + s));
    });
  }
  bool adjacent(VertexId a, VertexId b) const { return base_.adjacent(reduct(a), reduct(b)); }

 private:
  ProjectiveGraph base_;
  std::vector<Scalar> units_;
  std::size_t scalings_;
};

// Generic algorithms.

/// Hop distances from `start`; -1 for unreachable vertices.
template <GraphLike G>
std::vector<int> bfs(const G& g, VertexId start) {
  std::vector<int> dist(g.size(), -1);
  std::deque<VertexId> queue{start};
  dist[start] = 0;
  std::size_t reached = 1;
  // Once every vertex has a distance, expanding further changes nothing.
  while (!queue.empty() && reached < g.size()) {
    const VertexId v = queue.front();
    queue.pop_front();
    g.for_each_neighbor(v, [&](VertexId u) {
      if (dist[u] >= 0) return;
      dist[u] = dist[v] + 1;
      ++reached;
      queue.push_back(u);
    });
  }
  return dist;
}

/// Maximum BFS eccentricity over `sources`; -1 if some vertex is unreachable.
template <GraphLike G>
int diameter_from(const G& g, std::span<const VertexId> sources) {
  int best = 0;
  for (VertexId s : sources) {
    for (int d : bfs(g, s)) {
      if (d < 0) return -1;
      best = d > best ? d : best;
    }
  }
  return best;
}

/// Serial reference: BFS from every vertex.
template <GraphLike G>
int diameter(const G& g) {
  std::vector<VertexId> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexId>(i);
  return diameter_from(g, std::span<const VertexId>(all));
}

/// Shortest path from `from` to `to`; at every step the smallest-id neighbor
/// that is one hop closer is taken. Empty if unreachable.
template <GraphLike G>
std::vector<VertexId> shortest_path(const G& g, VertexId from, VertexId to) {
  if (from == to) return {from};
  std::vector<int> dist(g.size(), -1);
  std::vector<VertexId> frontier{to};
  dist[to] = 0;
  for (int level = 0; dist[from] < 0 && !frontier.empty(); ++level) {
    std::vector<VertexId> next;
    for (VertexId v : frontier)
      g.for_each_neighbor(v, [&](VertexId u) {
        if (dist[u] >= 0) return;
        dist[u] = level + 1;
        next.push_back(u);
      });
    frontier = std::move(next);
  }
  if (dist[from] < 0) return {};
  std::vector<VertexId> path{from};
  for (VertexId cur = from; cur != to;) {
    VertexId step = kNoVertex;
    g.for_each_neighbor(cur, [&](VertexId u) {
      if (dist[u] == dist[cur] - 1 && u < step) step = u;
    });
    path.push_back(step);
    cur = step;
  }
  return path;
}

struct LocalGraph {
  SimpleGraph graph;
  std::vector<VertexId> vertices;  // local index -> vertex of the host graph
};

/// Induced subgraph on the neighbors of v.
template <GraphLike G>
LocalGraph local_graph(const G& g, VertexId v) {
  LocalGraph out;
  g.for_each_neighbor(v, [&](VertexId u) { out.vertices.push_back(u); });
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j)
      if (g.adjacent(out.vertices[i], out.vertices[j]))
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
  out.graph = SimpleGraph(out.vertices.size(), edges);
  return out;
}

struct ReductCheck {
  bool ok = false;
  std::size_t affine_vertices = 0;
  std::size_t classes = 0;            // distinct neighbor sets
  std::size_t projective_vertices = 0;
  std::size_t fiber_size = 0;         // pairs per class, 0 if not constant
  std::size_t mismatches = 0;
};

/// Neighbor sets of the affine pair graph computed by brute force over all
/// pairs of vertices (independent of the graph's neighbor generator), then
/// compared with normalization: equal sets iff equal reduct_class.
ReductCheck verify_reduct_is_neighborhood_equality(const Field& F, std::size_t cap = kDefaultCap);

}  // namespace h3cover
