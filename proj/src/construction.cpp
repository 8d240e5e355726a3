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
#include "h3cover/construction.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "packed.hpp"

namespace h3cover {

SymTensor CoverVoltage::ell_unchecked(const AffineVertex& a, const AffineVertex& b) const {
  const Field& F = field_;
  const Scalar c = F.mul(F.inv(eval(F, a.h, a.v)), F.inv(eval(F, b.h, b.v)));
  return sym_mul(F, wedge(F, a.v, b.v), scale(F, c, phi(wedge(F, a.h, b.h))));
}

SymTensor CoverVoltage::ell(const AffineVertex& a, const AffineVertex& b) const {
  if (!is_vertex(field_, a) || !is_vertex(field_, b))
    throw std::invalid_argument("ell: h(v) = 0, not a vertex");
  if (!adjacent(field_, a, b)) throw std::invalid_argument("ell: vertices are not adjacent");
  return ell_unchecked(a, b);
}

SymTensor walk_voltage(const CoverVoltage& ell, std::span<const AffineVertex> path) {
  SymTensor acc;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) acc += ell.ell(path[i], path[i + 1]);
  return acc;
}

SymTensor closed_walk_voltage(const CoverVoltage& ell, std::span<const AffineVertex> walk) {
  if (walk.size() < 2) throw std::invalid_argument("closed walk needs at least two vertices");
  return walk_voltage(ell, walk) + ell.ell(walk.back(), walk.front());
}

SymTensor triangle_voltage(const CoverVoltage& ell, const AffineVertex& a, const AffineVertex& b,
                           const AffineVertex& c) {
  if (a == b || b == c || a == c) throw std::invalid_argument("triangle with a repeated vertex");
  const std::array<AffineVertex, 3> walk{a, b, c};
  return closed_walk_voltage(ell, walk);
}

bool exhaustive_supported(const std::string& check, int q) {
  static const std::set<std::string> algebraic{"phi",   "w2-generators", "dart",        "cocycle",
                                               "order2", "nonsplit",     "u-invariance"};
  if (q == 2 || algebraic.contains(check)) return true;
  if (q == 4) return check == "triangles" || check == "reductive" || check == "cycles" || check == "diameter";
  return q == 8 && check == "cycles";
}

namespace {

Report make_report(const char* check, const Field& F, Mode mode) {
  Report r;
  r.check = check;
  r.field = F.order();
  r.mode = mode;
  return r;
}

json walk_json(std::span<const AffineVertex> walk) {
  json out = json::array();
  for (const auto& a : walk) out.push_back(to_json(a));
  return out;
}

void require_exhaustive(const char* check, const Field& F) {
  if (!exhaustive_supported(check, F.order()))
    throw std::invalid_argument(std::string(check) + ": exhaustive mode is not offered for GF(" +
                                std::to_string(F.order()) + ")");
}

// Dart voltages of H3(F2) packed into words, indexed [a * n + b].
std::vector<std::uint64_t> dart_table(const ProjectiveGraph& g) {
  const CoverVoltage ell(g.field());
  const auto on = ell.on(g);
  const std::size_t n = g.size();
  std::vector<std::uint64_t> t(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    g.for_each_neighbor(static_cast<VertexId>(a), [&](VertexId b) {
      t[a * n + b] = pack_word(on(static_cast<VertexId>(a), b), g.field().degree());
    });
  return t;
}

std::vector<AffineVertex> vertices_of(const ProjectiveGraph& g, std::span<const VertexId> ids) {
  std::vector<AffineVertex> out;
  for (auto id : ids) out.push_back(to_affine(g.vertex(id)));
  return out;
}

bool same_class(const Field& F, const AffineVertex& a, const AffineVertex& b) {
  return reduct_class(F, a) == reduct_class(F, b);
}

constexpr int kMaxAttempts = 1000;

}  // namespace

// ---------------------------------------------------------------------------
// Triangles, quadrangles, pentagons.

Report verify_triangles(const Field& F, const VerifyOptions& opt) {
  Report r = make_report("triangles", F, opt.mode);
  const SymTensor u = big_u();
  const CoverVoltage ell(F);
  if (opt.mode == Mode::exhaustive) {
    require_exhaustive("triangles", F);
    const ProjectiveGraph g(F, opt.cap);
    const auto on = ell.on(g);
    const int k = F.degree();
    const std::size_t n = g.size();
    const std::uint64_t uw = pack_word(u, k);
    std::uint64_t count = 0;
    std::vector<IndexedWitness> found;
#pragma omp parallel reduction(+ : count)
    {
      // Voltages of the darts leaving a, indexed by the far end.
      std::vector<std::uint64_t> from_a(n);
      std::vector<IndexedWitness> local;
#pragma omp for schedule(dynamic, 8) nowait
      for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(n); ++ai) {
        const auto a = static_cast<VertexId>(ai);
        g.for_each_neighbor(a, [&](VertexId b) { from_a[b] = pack_word(on(a, b), k); });
        g.for_each_neighbor(a, [&](VertexId b) {
          if (b <= a) return;
          g.for_each_neighbor(b, [&](VertexId c) {
            if (c <= b || !g.adjacent(a, c)) return;
            ++count;
            const std::uint64_t v = from_a[b] ^ pack_word(on(b, c), k) ^ from_a[c];
            if (v != uw) {
              const std::array<VertexId, 3> ids{a, b, c};
              local.push_back({static_cast<std::uint64_t>(a),
                               {{"walk", walk_json(vertices_of(g, ids))},
                                {"voltage", to_json(unpack_word(v, k))}}});
            }
          });
        });
      }
#pragma omp critical(h3cover_triangles)
      for (auto& x : local) found.push_back(std::move(x));
    }
    r.samples = count;
    r.violations_from(std::move(found));
    r.details["triangles"] = count;
  } else {
    r.samples = opt.samples;
    r.violations_from(run_samples(opt.samples, opt.seed, [&](std::uint64_t, Rng& rng) -> std::optional<json> {
      const AffineVertex a = random_affine_vertex(F, rng);
      const AffineVertex b = random_neighbor(F, a, rng);
      const auto c = random_common_neighbor(F, a, b, rng);
      if (!c) return json{{"error", "adjacent pair without a common neighbor"}, {"a", to_json(a)}};
      const SymTensor v = triangle_voltage(ell, a, b, *c);
      if (v == u) return std::nullopt;
      const std::array<AffineVertex, 3> walk{a, b, *c};
      return json{{"walk", walk_json(walk)}, {"voltage", to_json(v)}};
    }));
  }
  r.details["expected"] = to_json(u);
  return r.finish();
}

namespace {

// Every closed walk a0 ... a(len-1) a0 of length 4 or 5 in H3(F2), each
// visited from every start and in both directions. Consecutive vertices are
// distinct by adjacency; walks with all vertices distinct are counted apart.
Report exhaustive_cycles(const Field& F, int length, const VerifyOptions& opt, const char* name) {
  Report r = make_report(name, F, Mode::exhaustive);
  require_exhaustive(name, F);
  const ProjectiveGraph g(F, opt.cap);
  const auto t = dart_table(g);
  const std::size_t n = g.size();
  const std::size_t words = g.dense_words();
  const int k = F.degree();
  std::uint64_t walks = 0, cycles = 0;
  auto check = [&](std::span<const VertexId> cyc) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      v ^= t[cyc[i] * n + cyc[(i + 1) % cyc.size()]];
    ++walks;
    std::vector<VertexId> sorted(cyc.begin(), cyc.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) ++cycles;
    if (!in_w2_plus_u(unpack_word(v, k)))
      r.violation({{"walk", walk_json(vertices_of(g, cyc))}, {"voltage", to_json(unpack_word(v, k))}});
  };
  auto common_neighbors = [&](VertexId a, VertexId b) {
    std::vector<VertexId> out;
    const auto ra = g.dense_row(a);
    const auto rb = g.dense_row(b);
    for (std::size_t w = 0; w < words; ++w)
      for (std::uint64_t bits = ra[w] & rb[w]; bits; bits &= bits - 1)
        out.push_back(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    return out;
  };
  for (std::size_t s = 0; s < n; ++s) {
    const auto a0 = static_cast<VertexId>(s);
    g.for_each_neighbor(a0, [&](VertexId a1) {
      g.for_each_neighbor(a1, [&](VertexId a2) {
        if (length == 4) {
          for (VertexId a3 : common_neighbors(a2, a0)) {
            const std::array<VertexId, 4> cyc{a0, a1, a2, a3};
            check(cyc);
          }
          return;
        }
        g.for_each_neighbor(a2, [&](VertexId a3) {
          for (VertexId a4 : common_neighbors(a3, a0)) {
            const std::array<VertexId, 5> cyc{a0, a1, a2, a3, a4};
            check(cyc);
          }
        });
      });
    });
  }
  r.samples = walks;
  r.details["closed_walks"] = walks;
  r.details["cycles"] = cycles / (2 * static_cast<std::uint64_t>(length));
  return r.finish();
}

// Random walk a0, ..., a(len-2) closed through a common neighbor of a(len-2)
// and a0. With `distinct`, all vertices lie in different classes.
std::optional<std::vector<AffineVertex>> sample_closed_walk(const Field& F, int len, bool distinct,
                                                            Rng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<AffineVertex> w{random_affine_vertex(F, rng)};
    bool ok = true;
    while (ok && static_cast<int>(w.size()) < len - 1) {
      const AffineVertex next = random_neighbor(F, w.back(), rng);
      if (distinct)
        for (const auto& x : w) ok = ok && !same_class(F, x, next);
      w.push_back(next);
    }
    if (!ok || same_class(F, w.back(), w.front())) continue;
    const auto last = random_common_neighbor(F, w.back(), w.front(), rng);
    if (!last) continue;
    if (distinct)
      for (const auto& x : w) ok = ok && !same_class(F, x, *last);
    if (!ok) continue;
    w.push_back(*last);
    return w;
  }
  return std::nullopt;
}

// Quadrangle with v0 = v2 (kind 1) or h0 = h2 (kind 2), up to rescaling.
std::optional<std::array<AffineVertex, 4>> sample_special_quadrangle(const Field& F, int kind,
                                                                     Rng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const AffineVertex a0 = random_affine_vertex(F, rng);
    const AffineVertex a1 = random_neighbor(F, a0, rng);
    AffineVertex a2;
    if (kind == 1) {
      const auto hs = annihilator(F, std::span<const Vector>(&a1.v, 1));
      const Covector h2 = random_nonzero_in(F, std::span<const Covector>(hs), rng);
      a2 = {scale(F, random_unit(F, rng), a0.v), h2};
    } else {
      const auto vs = kernel(F, std::span<const Covector>(&a1.h, 1));
      const Vector v2 = random_nonzero_in(F, std::span<const Vector>(vs), rng);
      a2 = {v2, scale(F, random_unit(F, rng), a0.h)};
    }
    if (!is_vertex(F, a2) || !adjacent(F, a1, a2) || same_class(F, a0, a2)) continue;
    const auto a3 = random_common_neighbor(F, a2, a0, rng);
    if (!a3 || same_class(F, *a3, a1)) continue;
    return std::array<AffineVertex, 4>{a0, a1, a2, *a3};
  }
  return std::nullopt;
}

}  // namespace

Report verify_quadrangles(const Field& F, const VerifyOptions& opt) {
  if (opt.mode == Mode::exhaustive) return exhaustive_cycles(F, 4, opt, "quadrangles");
  Report r = make_report("quadrangles", F, opt.mode);
  const CoverVoltage ell(F);
  r.samples = opt.samples;
  // Every fourth sample is special with a shared vector, every fourth one
  // with a shared covector.
  r.violations_from(run_samples(opt.samples, opt.seed, [&](std::uint64_t i, Rng& rng) -> std::optional<json> {
    std::vector<AffineVertex> w;
    if (i % 4 == 1 || i % 4 == 2) {
      const auto q = sample_special_quadrangle(F, static_cast<int>(i % 4), rng);
      if (q) w.assign(q->begin(), q->end());
    } else if (auto q = sample_closed_walk(F, 4, true, rng)) {
      w = *q;
    }
    if (w.empty()) return json{{"error", "no quadrangle found"}};
    const SymTensor v = closed_walk_voltage(ell, w);
    if (in_w2_plus_u(v)) return std::nullopt;
    return json{{"walk", walk_json(w)}, {"voltage", to_json(v)}};
  }));
  // Quadrangles with v0 = v2 against their closed form.
  const std::uint64_t special = std::min<std::uint64_t>(opt.samples, 1000);
  r.violations_from(run_samples(special, opt.seed ^ 0x5151u, [&](std::uint64_t, Rng& rng) -> std::optional<json> {
    const auto sq = random_special_quadrangle(F, rng);
    if (!sq) return json{{"error", "no special quadrangle found"}};
    const SymTensor v = closed_walk_voltage(ell, sq->walk);
    if (v == sq->predicted && in_w2(v)) return std::nullopt;
    return json{{"walk", walk_json(sq->walk)}, {"voltage", to_json(v)}, {"predicted", to_json(sq->predicted)}};
  }));
  r.samples += special;
  r.details["special_quadrangles"] = special;
  return r.finish();
}

Report verify_pentagons(const Field& F, const VerifyOptions& opt) {
  if (opt.mode == Mode::exhaustive) return exhaustive_cycles(F, 5, opt, "pentagons");
  Report r = make_report("pentagons", F, opt.mode);
  const CoverVoltage ell(F);
  r.samples = opt.samples;
  r.violations_from(run_samples(opt.samples, opt.seed, [&](std::uint64_t, Rng& rng) -> std::optional<json> {
    const auto w = sample_closed_walk(F, 5, true, rng);
    if (!w) return json{{"error", "no pentagon found"}};
    const SymTensor v = closed_walk_voltage(ell, *w);
    if (in_w2_plus_u(v)) return std::nullopt;
    return json{{"walk", walk_json(*w)}, {"voltage", to_json(v)}};
  }));
  return r.finish();
}

Report verify_long_walks(const Field& F, int min_len, int max_len, const VerifyOptions& opt) {
  if (min_len < 3 || max_len < min_len) throw std::invalid_argument("verify_long_walks: bad lengths");
  Report r = make_report("closed-walks", F, Mode::sample);
  const CoverVoltage ell(F);
  const auto span = static_cast<std::uint64_t>(max_len - min_len + 1);
  r.samples = opt.samples;
  r.details["lengths"] = {min_len, max_len};
  r.violations_from(run_samples(opt.samples, opt.seed, [&](std::uint64_t i, Rng& rng) -> std::optional<json> {
    const int len = min_len + static_cast<int>(i % span);
    const auto w = sample_closed_walk(F, len, false, rng);
    if (!w) return json{{"error", "no closed walk found"}, {"length", len}};
    const SymTensor v = closed_walk_voltage(ell, *w);
    if (in_w2_plus_u(v)) return std::nullopt;
    return json{{"walk", walk_json(*w)}, {"voltage", to_json(v)}};
  }));
  return r.finish();
}

std::optional<SpecialQuadrangle> random_special_quadrangle(const Field& F, Rng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto q = sample_special_quadrangle(F, 1, rng);
    if (!q) return std::nullopt;
    (*q)[2].v = (*q)[0].v;
    const auto& w = *q;
    std::array<Covector, 4> ah;
    std::array<Scalar, 4> alpha;
    for (std::size_t i = 0; i < 4; ++i) {
      alpha[i] = F.inv(eval(F, w[i].h, w[i].v));
      ah[i] = scale(F, alpha[i], w[i].h);
    }
    if (rank(F, std::span<const Covector>(ah)) != 4) continue;
    Matrix4 rows;
    for (std::size_t i = 0; i < 4; ++i) rows.m[i] = ah[i].c;
    // Columns of rows^-1 form the dual basis.
    const Matrix4 dual = transpose(*inverse(F, rows));
    std::array<Vector, 5> x;
    for (std::size_t i = 0; i < 4; ++i) x[i] = Vector{dual.m[i]};
    x[4] = x[0] + x[2];
    SpecialQuadrangle out;
    out.walk = w;
    out.beta = F.mul(alpha[1], eval(F, w[1].h, w[3].v));
    out.gamma = F.mul(alpha[3], eval(F, w[3].h, w[1].v));
    out.d = det(F, rows);
    out.predicted = scale(F, out.d,
                          scale(F, out.gamma, square(F, wedge(F, x[3], x[4]))) +
                              scale(F, out.beta, square(F, wedge(F, x[1], x[4]))));
    return out;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generators of W^(2).

namespace {

std::array<std::array<int, 4>, 24> permutations4() {
  std::array<std::array<int, 4>, 24> out{};
  std::array<int, 4> p{0, 1, 2, 3};
  std::size_t i = 0;
  do out[i++] = p;
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<GeneratorCycle> w2_generator_cycles(const Field& F, std::span<const Scalar> lambdas) {
  std::vector<Scalar> ls(lambdas.begin(), lambdas.end());
  if (ls.empty()) ls = F.f2_basis();
  const auto perms = permutations4();
  std::vector<GeneratorCycle> out;
  for (std::size_t pi = 0; pi < perms.size(); ++pi) {
    const auto& p = perms[pi];
    auto E = [&](int i) { return e(p[static_cast<std::size_t>(i - 1)] + 1); };
    auto Fc = [&](int i) { return f(p[static_cast<std::size_t>(i - 1)] + 1); };
    for (Scalar lambda : ls) {
      const Vector v1 = E(1), v2 = E(3), v3 = E(3) + scale(F, lambda, E(2));
      const Covector h1 = Fc(3), h2 = Fc(1), h3 = Fc(1) + Fc(4);
      GeneratorCycle c;
      c.walk = {AffineVertex{v1, h2}, AffineVertex{v2, h1}, AffineVertex{v1, h3},
                AffineVertex{v3, h1}};
      c.pattern = static_cast<int>(pi);
      c.lambda = lambda;
      const auto [lo, hi] = std::minmax(p[0], p[1]);
      const std::size_t slot = wedge_slot(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
      c.expected = scale(F, lambda, square(F, w(static_cast<int>(slot) + 1)));
      out.push_back(c);
    }
  }
  return out;
}

Report verify_w2_generators(const Field& F) {
  Report r = make_report("w2-generators", F, Mode::exhaustive);
  const CoverVoltage ell(F);
  const auto units = F.units();
  std::size_t base_ok = 0;
  for (const auto& c : w2_generator_cycles(F, units)) {
    ++r.samples;
    const SymTensor v = closed_walk_voltage(ell, c.walk);
    if (!(v == c.expected))
      r.violation({{"pattern", c.pattern}, {"lambda", c.lambda.bits}, {"walk", walk_json(c.walk)},
                   {"voltage", to_json(v)}, {"expected", to_json(c.expected)}});
    else if (c.pattern == 0)
      ++base_ok;
  }
  // F2-span of the family over an F2 basis of F.
  F2Span span(kSymDim * static_cast<std::size_t>(F.degree()));
  bool inside = true;
  for (const auto& c : w2_generator_cycles(F)) {
    const SymTensor v = closed_walk_voltage(ell, c.walk);
    inside = inside && in_w2(v);
    span.insert(to_bits(v, F.degree()));
  }
  const auto want = 6 * static_cast<std::size_t>(F.degree());
  r.details["base_pattern_matches"] = base_ok;
  r.details["span_rank"] = span.rank();
  r.details["expected_rank"] = want;
  if (!inside || span.rank() != want)
    r.violation({{"span_rank", span.rank()}, {"all_in_w2", inside}});
  return r.finish();
}

// ---------------------------------------------------------------------------
// Reductivity, equivariance, U, phi.

Report verify_reductive(const Field& F, const VerifyOptions& opt) {
  if (opt.mode == Mode::exhaustive) require_exhaustive("reductive", F);
  const CoverVoltage ell(F);
  return check_reductive(
      F, [&](const AffineVertex& a, const AffineVertex& b) { return ell.ell(a, b); }, opt);
}

Report verify_equivariance(const Field& F, const VerifyOptions& opt) {
  if (opt.mode == Mode::exhaustive) require_exhaustive("equivariance", F);
  const CoverVoltage ell(F);
  Rng rng = sample_rng(opt.seed, 0xe9u);
  std::vector<Matrix4> gs;
  const int count = opt.mode == Mode::exhaustive ? 100 : 20;
  for (int i = 0; i < count; ++i) gs.push_back(random_sl4(F, rng));
  return check_equivariance(
      F, [&](const AffineVertex& a, const AffineVertex& b) { return ell.ell(a, b); },
      std::span<const Matrix4>(gs), opt);
}

Report verify_u_invariance(const Field& F, std::uint64_t seed) {
  Report r = make_report("u-invariance", F, Mode::sample);
  const SymTensor u = big_u(F);
  Rng rng = sample_rng(seed, 0x55u);
  if (!(u == big_u())) r.violation({{"what", "big_u(F) differs from the field-free U"}});
  for (int i = 0; i < 100; ++i) {
    const Matrix4 g = random_sl4(F, rng);
    ++r.samples;
    if (!(act_s2(F, g, u) == u)) r.violation({{"what", "SL4 moves U"}, {"sample", i}});
  }
  for (int i = 0; i < 20; ++i) {
    const Matrix4 g = random_gl4(F, rng);
    ++r.samples;
    if (!(act_s2(F, g, u) == scale(F, det(F, g), u)))
      r.violation({{"what", "GL4 does not scale U by det"}, {"sample", i}});
  }
  for (int i = 0; i < 50; ++i) {
    const Matrix4 g = random_gl4(F, rng);
    const Scalar d = F.inv(det(F, g));
    const Vector w0 = scale(F, d, Vector{g.m[0]});
    ++r.samples;
    if (!(delta(F, w0, Vector{g.m[1]}, Vector{g.m[2]}, Vector{g.m[3]}) == u))
      r.violation({{"what", "delta of a unimodular basis differs from U"}, {"sample", i}});
  }
  return r.finish();
}

Report verify_phi(const Field& F) {
  Report r = make_report("phi", F, Mode::exhaustive);
  // (f_i ^ f_j)^phi = w_slot from the basis table.
  const std::array<std::array<int, 3>, 6> table{{
      {3, 4, 1}, {2, 4, 2}, {2, 3, 3}, {1, 4, 4}, {1, 3, 5}, {1, 2, 6}}};
  for (const auto& [i, j, k] : table) {
    ++r.samples;
    const Bivector got = phi(wedge(F, f(i), f(j)));
    if (!(got == w(k)))
      r.violation({{"dual", {i, j}}, {"expected", to_json(w(k))}, {"got", to_json(got)}});
  }
  ++r.samples;
  const bool consistent = phi_consistency_check(F);
  if (!consistent) r.violation({{"what", "phi_consistency_check failed"}});
  // Decomposable pairs: h1(v1) h2(v2) + h1(v2) h2(v1) against the pairing
  // through phi and the 4-fold wedge.
  Rng rng = sample_rng(0x9f, static_cast<std::uint64_t>(F.order()));
  for (int s = 0; s < 100; ++s) {
    const AffineVertex a = random_affine_vertex(F, rng);
    const AffineVertex b = random_affine_vertex(F, rng);
    const Scalar direct = F.add(F.mul(eval(F, a.h, a.v), eval(F, b.h, b.v)),
                                F.mul(eval(F, a.h, b.v), eval(F, b.h, a.v)));
    const Scalar via_phi = wedge_pairing(F, phi(wedge(F, a.h, b.h)), wedge(F, a.v, b.v));
    ++r.samples;
    if (!(direct == via_phi)) r.violation({{"a", to_json(a)}, {"b", to_json(b)}});
  }
  r.details["consistency_check"] = consistent;
  return r.finish();
}

}  // namespace h3cover
