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
#include "h3cover/graphs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace h3cover {

namespace {

// 4 bits per coordinate is enough for GF(16).
std::uint32_t pack(const std::array<Scalar, 4>& c) {
  return static_cast<std::uint32_t>(c[0].bits) << 12 | static_cast<std::uint32_t>(c[1].bits) << 8 |
         static_cast<std::uint32_t>(c[2].bits) << 4 | c[3].bits;
}

}  // namespace

bool is_vertex(const Field& F, const AffineVertex& a) { return !eval(F, a.h, a.v).is_zero(); }

bool adjacent(const Field& F, const AffineVertex& a, const AffineVertex& b) {
  return eval(F, a.h, b.v).is_zero() && eval(F, b.h, a.v).is_zero();
}

bool adjacent(const Field& F, const ProjVertex& a, const ProjVertex& b) {
  return eval(F, a.h, b.v).is_zero() && eval(F, b.h, a.v).is_zero();
}

ProjVertex reduct_class(const Field& F, const AffineVertex& a) {
  return {normalize(F, a.v), normalize(F, a.h)};
}

AffineVertex act(const Field& F, const AffineVertex& a, const Matrix4& g) {
  return {apply(F, a.v, g), apply(F, a.h, g)};
}

ProjVertex act(const Field& F, const ProjVertex& a, const Matrix4& g) {
  return reduct_class(F, act(F, to_affine(a), g));
}

std::vector<Vector> projective_points(const Field& F) {
  const int q = F.order();
  std::vector<Vector> out;
  for (int code = 1; code < q * q * q * q; ++code) {
    Vector v;
    int rest = code;
    for (int i = 3; i >= 0; --i) {
      v.c[static_cast<std::size_t>(i)] = Scalar(static_cast<unsigned>(rest % q));
      rest /= q;
    }
    if (normalize(F, v) == v) out.push_back(v);
  }
  // The base-q counter above already runs in lexicographic order.
  return out;
}

AffineVertex random_affine_vertex(const Field& F, Rng& rng) {
  const std::array<Vector, 4> basis{e(1), e(2), e(3), e(4)};
  const std::array<Covector, 4> dual{f(1), f(2), f(3), f(4)};
  const Vector v = random_nonzero_in(F, std::span<const Vector>(basis), rng);
  for (;;) {
    const Covector h = random_nonzero_in(F, std::span<const Covector>(dual), rng);
    if (!eval(F, h, v).is_zero()) return {v, h};
  }
}

AffineVertex random_neighbor(const Field& F, const AffineVertex& a, Rng& rng) {
  const auto ws = kernel(F, std::span<const Covector>(&a.h, 1));
  const auto gs = annihilator(F, std::span<const Vector>(&a.v, 1));
  for (;;) {
    const Vector w = random_nonzero_in(F, std::span<const Vector>(ws), rng);
    const Covector g = random_nonzero_in(F, std::span<const Covector>(gs), rng);
    if (!eval(F, g, w).is_zero()) return {w, g};
  }
}

std::optional<AffineVertex> random_common_neighbor(const Field& F, const AffineVertex& a,
                                                   const AffineVertex& b, Rng& rng) {
  const std::array<Covector, 2> hs{a.h, b.h};
  const std::array<Vector, 2> vs{a.v, b.v};
  const auto ws = kernel(F, std::span<const Covector>(hs));
  const auto gs = annihilator(F, std::span<const Vector>(vs));
  if (ws.empty() || gs.empty()) return std::nullopt;
  // Some admissible pair exists iff some basis pairing is nonzero.
  bool any = false;
  for (const auto& w : ws)
    for (const auto& g : gs) any = any || !eval(F, g, w).is_zero();
  if (!any) return std::nullopt;
  for (;;) {
    const Vector w = random_nonzero_in(F, std::span<const Vector>(ws), rng);
    const Covector g = random_nonzero_in(F, std::span<const Covector>(gs), rng);
    if (!eval(F, g, w).is_zero()) return AffineVertex{w, g};
  }
}

AffineVertex random_rescale(const Field& F, const AffineVertex& a, Rng& rng) {
  return {scale(F, random_unit(F, rng), a.v), scale(F, random_unit(F, rng), a.h)};
}

// ---------------------------------------------------------------------------

SimpleGraph::SimpleGraph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::size_t> deg(n, 0);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw std::invalid_argument("SimpleGraph: vertex out of range");
    if (a == b) throw std::invalid_argument("SimpleGraph: loop");
    ++deg[a];
    ++deg[b];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [a, b] : edges) {
    targets_[fill[a]++] = b;
    targets_[fill[b]++] = a;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last)
      throw std::invalid_argument("SimpleGraph: duplicate edge");
  }
}

std::span<const VertexId> SimpleGraph::neighbors(VertexId v) const {
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool SimpleGraph::adjacent(VertexId a, VertexId b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<VertexId, VertexId>> SimpleGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count());
  for (std::size_t a = 0; a < size(); ++a)
    for (VertexId b : neighbors(static_cast<VertexId>(a)))
      if (a < b) out.emplace_back(static_cast<VertexId>(a), b);
  return out;
}

// ---------------------------------------------------------------------------

std::size_t ProjectiveGraph::vertex_count(const Field& F) {
  const std::size_t q = static_cast<std::size_t>(F.order());
  const std::size_t points = (q * q * q * q - 1) / (q - 1);
  return points * q * q * q;
}

ProjectiveGraph::ProjectiveGraph(const Field& F, std::size_t cap) : field_(F) {
  const std::size_t n = vertex_count(F);
  if (n > cap)
    throw std::length_error("ProjectiveGraph: " + std::to_string(n) +
                            " vertices exceed the cap of " + std::to_string(cap));
  points_ = projective_points(F);
  const std::size_t P = points_.size();
  point_lookup_.assign(1u << 16, -1);
  for (std::size_t i = 0; i < P; ++i) point_lookup_[pack(points_[i].c)] = static_cast<std::int32_t>(i);

  pairing_.resize(P * P);
  points_on_.assign(P, {});
  hypers_through_.assign(P, {});
  for (std::size_t p = 0; p < P; ++p)
    for (std::size_t h = 0; h < P; ++h) {
      const Scalar s = eval(F, Covector{points_[h].c}, points_[p]);
      pairing_[p * P + h] = s;
      if (s.is_zero()) {
        points_on_[h].push_back(static_cast<std::uint32_t>(p));
        hypers_through_[p].push_back(static_cast<std::uint32_t>(h));
      }
    }

  index_.assign(P * P, kNoVertex);
  vertex_point_.reserve(n);
  vertex_hyper_.reserve(n);
  for (std::size_t p = 0; p < P; ++p)
    for (std::size_t h = 0; h < P; ++h) {
      if (pairing_[p * P + h].is_zero()) continue;
      index_[p * P + h] = static_cast<VertexId>(vertex_point_.size());
      vertex_point_.push_back(static_cast<std::uint32_t>(p));
      vertex_hyper_.push_back(static_cast<std::uint32_t>(h));
    }

  // q^2 + q + 1 points on X, and q^2 hyperplanes through x avoiding each.
  const std::size_t q = static_cast<std::size_t>(F.order());
  const std::size_t plane = q * q + q + 1;
  degree_ = plane * q * q;

  if (F.order() <= 4) {
    words_ = (n + 63) / 64;
    dense_.assign(n * words_, 0);
    for (std::size_t v = 0; v < n; ++v)
      for_each_neighbor(static_cast<VertexId>(v),
                        [&](VertexId u) { dense_[v * words_ + u / 64] |= 1ULL << (u % 64); });
  }
}

ProjVertex ProjectiveGraph::vertex(VertexId v) const {
  return {points_[vertex_point_[v]], hyperplane(vertex_hyper_[v])};
}

std::optional<std::uint32_t> ProjectiveGraph::point_index(const Vector& v) const {
  for (auto c : v.c)
    if (!field_.contains(c)) return std::nullopt;
  const Vector n = normalize(field_, v);
  if (n.is_zero()) return std::nullopt;
  return static_cast<std::uint32_t>(point_lookup_[pack(n.c)]);
}

std::optional<std::uint32_t> ProjectiveGraph::hyperplane_index(const Covector& h) const {
  return point_index(Vector{h.c});
}

std::optional<VertexId> ProjectiveGraph::index_of(const ProjVertex& pv) const {
  return index_of(to_affine(pv));
}

std::optional<VertexId> ProjectiveGraph::index_of(const AffineVertex& a) const {
  const auto p = point_index(a.v);
  const auto h = hyperplane_index(a.h);
  if (!p || !h) return std::nullopt;
  const VertexId id = index_of(*p, *h);
  if (id == kNoVertex) return std::nullopt;
  return id;
}

bool ProjectiveGraph::adjacent(VertexId a, VertexId b) const {
  if (!dense_.empty()) return (dense_[a * words_ + b / 64] >> (b % 64)) & 1u;
  return pairing(vertex_point_[a], vertex_hyper_[b]).is_zero() &&
         pairing(vertex_point_[b], vertex_hyper_[a]).is_zero();
}

// ---------------------------------------------------------------------------

AffineGraph::AffineGraph(const Field& F, std::size_t cap)
    : base_(F, cap), units_(F.units()), scalings_(units_.size() * units_.size()) {
  if (base_.size() * scalings_ > cap)
    throw std::length_error("AffineGraph: " + std::to_string(base_.size() * scalings_) +
                            " vertices exceed the cap of " + std::to_string(cap));
}

AffineVertex AffineGraph::vertex(VertexId v) const {
  const ProjVertex p = base_.vertex(reduct(v));
  const std::size_t s = v % scalings_;
  const Field& F = base_.field();
  return {scale(F, units_[s / units_.size()], p.v), scale(F, units_[s % units_.size()], p.h)};
}

std::optional<VertexId> AffineGraph::index_of(const AffineVertex& a) const {
  const auto base = base_.index_of(a);
  if (!base) return std::nullopt;
  // a.v = lambda * p.v, lambda read off the first nonzero coordinate.
  auto factor = [](const auto& x) {
    for (auto c : x.c)
      if (!c.is_zero()) return c;
    return Scalar{};
  };
  const Scalar lambda = factor(a.v);
  const Scalar mu = factor(a.h);
  const auto li = static_cast<std::size_t>(std::find(units_.begin(), units_.end(), lambda) - units_.begin());
  const auto mi = static_cast<std::size_t>(std::find(units_.begin(), units_.end(), mu) - units_.begin());
  return static_cast<VertexId>(*base * scalings_ + li * units_.size() + mi);
}

// ---------------------------------------------------------------------------

ReductCheck verify_reduct_is_neighborhood_equality(const Field& F, std::size_t cap) {
  // All pairs (v, h) with h(v) != 0 are enumerated directly from coordinates,
  // independently of ProjectiveGraph. The neighbor set of (v, h) is
  // {j : h(v_j) = 0} & {j : h_j(v) = 0}; both factors are tabulated once per
  // distinct vector and covector as bitsets.
  const int q = F.order();
  const std::size_t q4 = static_cast<std::size_t>(q) * q * q * q;
  auto coords = [&](std::size_t code) {
    std::array<Scalar, 4> c{};
    for (int i = 3; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = Scalar(static_cast<unsigned>(code % q));
      code /= q;
    }
    return c;
  };
  const std::size_t D = q4 - 1;  // nonzero vectors, index = code - 1
  std::vector<std::uint8_t> kills(D * D);  // [v * D + h] = (h(v) == 0)
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = 0; b < D; ++b)
      kills[a * D + b] = eval(F, Covector{coords(b + 1)}, Vector{coords(a + 1)}).is_zero();

  std::vector<std::uint32_t> vi, hi;
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = 0; b < D; ++b)
      if (!kills[a * D + b]) {
        vi.push_back(static_cast<std::uint32_t>(a));
        hi.push_back(static_cast<std::uint32_t>(b));
      }
  const std::size_t n = vi.size();
  if (n > cap) throw std::length_error("reduct check: affine vertex count exceeds the cap");
  const std::size_t words = (n + 63) / 64;

  // by_vector[a]: vertices j whose covector kills vector a.
  // by_covector[b]: vertices j whose vector is killed by covector b.
  std::vector<std::uint64_t> by_vector(D * words, 0), by_covector(D * words, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t bit = 1ULL << (j % 64);
    for (std::size_t a = 0; a < D; ++a)
      if (kills[a * D + hi[j]]) by_vector[a * words + j / 64] |= bit;
    for (std::size_t b = 0; b < D; ++b)
      if (kills[vi[j] * D + b]) by_covector[b * words + j / 64] |= bit;
  }
  auto neighbors = [&](std::size_t i, std::vector<std::uint64_t>& out) {
    const std::uint64_t* x = &by_vector[vi[i] * words];
    const std::uint64_t* y = &by_covector[hi[i] * words];
    for (std::size_t w = 0; w < words; ++w) out[w] = x[w] & y[w];
  };

  // Group vertices by exact neighbor set.
  std::vector<std::vector<std::uint64_t>> sets;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> class_size;
  std::vector<std::uint64_t> cur(words);
  for (std::size_t i = 0; i < n; ++i) {
    neighbors(i, cur);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : cur) h = (h ^ w) * 0x100000001b3ULL;
    auto& bucket = by_hash[h];
    std::size_t found = sets.size();
    for (std::size_t c : bucket)
      if (sets[c] == cur) {
        found = c;
        break;
      }
    if (found == sets.size()) {
      sets.push_back(cur);
      class_size.push_back(0);
      bucket.push_back(found);
    }
    class_of[i] = found;
    ++class_size[found];
  }

  ReductCheck out;
  out.affine_vertices = n;
  out.classes = sets.size();
  // Same neighbor set => same reduct class, and distinct sets => distinct
  // classes (checked by counting distinct classes).
  std::vector<std::optional<ProjVertex>> class_rep(out.classes);
  for (std::size_t i = 0; i < n; ++i) {
    const ProjVertex r = reduct_class(F, {Vector{coords(vi[i] + 1)}, Covector{coords(hi[i] + 1)}});
    auto& rep = class_rep[class_of[i]];
    if (!rep) rep = r;
    else if (!(*rep == r)) ++out.mismatches;
  }
  std::vector<ProjVertex> reps;
  for (const auto& r : class_rep) reps.push_back(*r);
  std::sort(reps.begin(), reps.end());
  out.projective_vertices =
      static_cast<std::size_t>(std::unique(reps.begin(), reps.end()) - reps.begin());
  out.mismatches += out.classes - out.projective_vertices;

  out.fiber_size = class_size.empty() ? 0 : class_size.front();
  for (auto c : class_size)
    if (c != out.fiber_size) out.fiber_size = 0;
  out.ok = out.mismatches == 0 && out.fiber_size != 0 &&
           out.projective_vertices == ProjectiveGraph::vertex_count(F);
  return out;
}

}  // namespace h3cover
