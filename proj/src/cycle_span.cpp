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
#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "h3cover/construction.hpp"
#include "packed.hpp"

namespace h3cover {

namespace {

// XOR basis of 64-bit words keyed by the leading bit.
struct WordBasis {
  std::array<std::uint64_t, 64> row{};
  std::size_t rank = 0;

  bool insert(std::uint64_t v) {
    while (v) {
      const int top = 63 - std::countl_zero(v);
      if (!row[top]) {
        row[top] = v;
        ++rank;
        return true;
      }
      v ^= row[top];
    }
    return false;
  }
};

Bits word_bits(std::uint64_t w, std::size_t dim) {
  Bits b(dim);
  for (std::size_t i = 0; i < dim; ++i)
    if (w >> i & 1u) b.set(i);
  return b;
}

std::uint64_t u_word(int k) { return pack_word(big_u(), k); }

template <int K>
void span_kernel(const ProjectiveGraph& g, const std::vector<std::uint64_t>& t,
                 const std::vector<Scalar>& c, CycleSpan& out) {
  constexpr std::size_t nb = 6 * K;
  const Field& F = g.field();
  const std::size_t P = g.point_count();
  const std::size_t q = static_cast<std::size_t>(F.order());

  std::vector<std::uint32_t> Y(P * P);
  for (std::size_t X = 0; X < P; ++X)
    for (std::size_t H = 0; H < P; ++H)
      Y[X * P + H] = pack_bivector(
          phi(wedge(F, g.hyperplane(static_cast<std::uint32_t>(X)), g.hyperplane(static_cast<std::uint32_t>(H)))),
          K);

  auto basis = [](std::size_t i) {
    Bivector b;
    b.c[i / K] = Scalar(1u << (i % K));
    return b;
  };
  std::vector<std::uint64_t> tbit(nb * nb);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) tbit[i * nb + j] = pack_word(sym_mul(F, basis(i), basis(j)), K);

  // st[(s * K + ch) * 64 + m]: s times the bivector whose bits ch*6.. are m.
  std::vector<std::uint32_t> st(q * K * 64);
  for (std::size_t s = 0; s < q; ++s)
    for (std::size_t ch = 0; ch < K; ++ch)
      for (std::uint32_t m = 0; m < 64; ++m)
        st[(s * K + ch) * 64 + m] =
            pack_bivector(scale(F, Scalar(static_cast<unsigned>(s)), unpack_bivector(m << (6 * ch), K)), K);

  const std::uint64_t off = offdiag_mask(K);
  const std::uint64_t uoff = u_word(K) & off;
  const std::size_t full = nb + 1;

  WordBasis merged;
  merged.insert(u_word(K));
  std::uint64_t edges = 0, outside = 0;
  std::vector<std::pair<VertexId, VertexId>> witnesses;
  const auto points = static_cast<std::int64_t>(P);

#pragma omp parallel reduction(+ : edges, outside)
  {
    WordBasis local;
    local.insert(u_word(K));
    std::vector<std::pair<VertexId, VertexId>> local_w;
    std::array<std::uint64_t, nb> row_a{};
    std::array<std::array<std::uint64_t, 64>, K> T{};
    struct End {
      std::uint32_t hyper;
      VertexId id;
      std::uint8_t c;
      std::uint64_t t;
    };
    std::vector<End> list1, list2;

#pragma omp for schedule(dynamic, 1)
    for (std::int64_t xi = 0; xi < points; ++xi) {
      const auto x = static_cast<std::uint32_t>(xi);
      for (std::uint32_t p = x + 1; p < P; ++p) {
        const std::uint32_t A = pack_bivector(wedge(F, g.point(x), g.point(p)), K);
        for (std::size_t j = 0; j < nb; ++j) {
          std::uint64_t acc = 0;
          for (std::uint32_t bits = A; bits; bits &= bits - 1)
            acc ^= tbit[static_cast<std::size_t>(std::countr_zero(bits)) * nb + j];
          row_a[j] = acc;
        }
        for (std::size_t ch = 0; ch < K; ++ch) {
          T[ch][0] = 0;
          for (std::uint32_t m = 1; m < 64; ++m)
            T[ch][m] = T[ch][m & (m - 1)] ^ row_a[ch * 6 + static_cast<std::size_t>(std::countr_zero(m))];
        }
        // Vertices (x, X) with p on X, and (p, H) with x on H.
        list1.clear();
        list2.clear();
        for (std::uint32_t X : g.hyperplanes_through(p)) {
          if (g.pairing(x, X).is_zero()) continue;
          const VertexId a = g.index_of(x, X);
          list1.push_back({X, a, c[a].bits, t[a]});
        }
        for (std::uint32_t H : g.hyperplanes_through(x)) {
          if (g.pairing(p, H).is_zero()) continue;
          const VertexId b = g.index_of(p, H);
          list2.push_back({H, b, c[b].bits, t[b]});
        }
        for (const End& a : list1) {
          const std::uint32_t* yrow = &Y[static_cast<std::size_t>(a.hyper) * P];
          for (const End& b : list2) {
            const std::size_t s = F.mul_fast(Scalar(a.c), Scalar(b.c)).bits;
            const std::uint32_t y = yrow[b.hyper];
            const std::uint32_t* sts = &st[s * K * 64];
            std::uint32_t ys = 0;
            for (std::size_t ch = 0; ch < K; ++ch) ys ^= sts[ch * 64 + ((y >> (6 * ch)) & 63u)];
            std::uint64_t v = a.t ^ b.t;
            for (std::size_t ch = 0; ch < K; ++ch) v ^= T[ch][(ys >> (6 * ch)) & 63u];
            ++edges;
            const std::uint64_t o = v & off;
            if (o != 0 && o != uoff) {
              ++outside;
              if (local_w.size() < 8) local_w.emplace_back(a.id, b.id);
            } else if (local.rank < full && v) {
              local.insert(v);
            }
          }
        }
      }
    }
#pragma omp critical(h3cover_span_merge)
    {
      for (std::uint64_t r : local.row)
        if (r) merged.insert(r);
      witnesses.insert(witnesses.end(), local_w.begin(), local_w.end());
    }
  }

  std::sort(witnesses.begin(), witnesses.end());
  if (witnesses.size() > 8) witnesses.resize(8);
  out.rank_with_u = merged.rank;
  out.edges = static_cast<std::size_t>(edges) - (g.size() - 1);
  out.outside_w2_u = static_cast<std::size_t>(outside);
  out.outside = std::move(witnesses);
  for (std::uint64_t r : merged.row)
    if (r) out.basis.push_back(word_bits(r, kSymDim * K));
}

}  // namespace

CycleSpan cycle_span_reference(const ProjectiveGraph& g) {
  const Field& F = g.field();
  const int k = F.degree();
  const CoverVoltage ell(F);
  CycleSpan out;
  out.degree = k;
  F2Span span(kSymDim * static_cast<std::size_t>(k));
  span.insert(to_bits(big_u(), k));
  const auto gens = fundamental_cycle_generators(g, ell.on(g), standard_root(g));
  out.edges = gens.size();
  for (const auto& v : gens) {
    if (!in_w2_plus_u(v)) ++out.outside_w2_u;
    span.insert(to_bits(v, k));
  }
  out.rank_with_u = span.rank();
  out.basis = span.basis();
  return out;
}

CycleSpan cycle_span_fast(const ProjectiveGraph& g) {
  const Field& F = g.field();
  const int k = F.degree();
  if (k > 3) throw std::invalid_argument("cycle_span_fast: degree > 3 is not supported");
  const CoverVoltage ell(F);
  const SpanningTree tree = bfs_tree(g, standard_root(g));
  if (!tree.spanning) throw std::invalid_argument("cycle_span_fast: graph is disconnected");
  std::vector<std::uint64_t> t(g.size(), 0);
  for (std::size_t i = 1; i < tree.order.size(); ++i) {
    const VertexId v = tree.order[i];
    const VertexId u = tree.parent[v];
    t[v] = t[u] ^ pack_word(ell.ell_unchecked(to_affine(g.vertex(u)), to_affine(g.vertex(v))), k);
  }
  std::vector<Scalar> c(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto id = static_cast<VertexId>(v);
    c[v] = F.inv(g.pairing(g.point_of(id), g.hyperplane_of(id)));
  }
  CycleSpan out;
  out.degree = k;
  if (k == 1) span_kernel<1>(g, t, c, out);
  else if (k == 2) span_kernel<2>(g, t, c, out);
  else span_kernel<3>(g, t, c, out);
  return out;
}

Report verify_cycle_span(const Field& F, const VerifyOptions& opt, bool use_reference) {
  const int k = F.degree();
  if (ProjectiveGraph::vertex_count(F) > opt.cap || (k > 3 && !use_reference))
    return not_applicable("cycles", F.order(),
                          "H3(GF(" + std::to_string(F.order()) + ")) has " +
                              std::to_string(ProjectiveGraph::vertex_count(F)) +
                              " vertices; the cycle span kernel covers GF(2), GF(4), GF(8)");
  Report r;
  r.check = "cycles";
  r.field = F.order();
  r.mode = Mode::exhaustive;
  const ProjectiveGraph g(F, opt.cap);
  const CycleSpan s = use_reference ? cycle_span_reference(g) : cycle_span_fast(g);
  const std::size_t want = 6 * static_cast<std::size_t>(k);
  r.samples = s.edges;
  for (const auto& [a, b] : s.outside)
    r.violation({{"edge", {to_json(g.vertex(a)), to_json(g.vertex(b))}},
                 {"voltage_not_in", "W2 + <U>"}});
  r.violations += s.outside_w2_u - s.outside.size();

  // The span contains every F2 basis vector b w_i^2 of W^(2).
  F2Span span(kSymDim * static_cast<std::size_t>(k));
  for (const auto& b : s.basis) span.insert(b);
  std::size_t w2_missing = 0;
  for (std::size_t i = 1; i <= kWedgeDim; ++i)
    for (Scalar b : F.f2_basis())
      if (!span.contains(to_bits(scale(F, b, square(F, w(static_cast<int>(i)))), k))) ++w2_missing;
  if (w2_missing) r.violation({{"w2_basis_vectors_missing", w2_missing}});
  if (s.rank_with_u != want + 1)
    r.violation({{"rank_mod_u", s.rank_with_u - 1}, {"expected", want}});

  r.details["kernel"] = use_reference ? "reference" : "packed";
  r.details["fundamental_cycles"] = s.edges;
  r.details["rank_with_u"] = s.rank_with_u;
  r.details["rank_mod_u"] = s.rank_with_u - 1;
  r.details["expected_rank"] = want;
  r.details["outside_w2_u"] = s.outside_w2_u;
  return r.finish();
}

// ---------------------------------------------------------------------------
// Diameter.

int diameter_dense(const ProjectiveGraph& g, bool parallel) {
  if (!g.has_dense_adjacency()) throw std::invalid_argument("diameter_dense: no dense adjacency");
  const std::size_t n = g.size();
  const std::size_t words = g.dense_words();
  const std::uint64_t tail = n % 64 ? (std::uint64_t{1} << (n % 64)) - 1 : ~std::uint64_t{0};
  auto full = [&](const std::vector<std::uint64_t>& r) {
    for (std::size_t i = 0; i + 1 < words; ++i)
      if (r[i] != ~std::uint64_t{0}) return false;
    return (r[words - 1] & tail) == tail;
  };
  int worst = 0;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel if (parallel) reduction(max : worst)
  {
    std::vector<std::uint64_t> reach(words);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t si = 0; si < count; ++si) {
      const auto s = static_cast<VertexId>(si);
      const auto row = g.dense_row(s);
      std::copy(row.begin(), row.end(), reach.begin());
      reach[s / 64] |= std::uint64_t{1} << (s % 64);
      int ecc = n == 1 ? 0 : 1;
      if (!full(reach)) {
        g.for_each_neighbor(s, [&](VertexId u) {
          const auto ru = g.dense_row(u);
          for (std::size_t i = 0; i < words; ++i) reach[i] |= ru[i];
        });
        ecc = full(reach) ? 2 : 3;
      }
      worst = std::max(worst, ecc);
    }
  }
  return worst;
}

Report verify_diameter(const Field& F, const VerifyOptions& opt) {
  if (ProjectiveGraph::vertex_count(F) > opt.cap)
    return not_applicable("diameter", F.order(), "vertex count exceeds the cap");
  Report r;
  r.check = "diameter";
  r.field = F.order();
  const ProjectiveGraph g(F, opt.cap);
  const bool exhaustive = opt.mode == Mode::exhaustive && exhaustive_supported("diameter", F.order());
  r.mode = exhaustive ? Mode::exhaustive : Mode::sample;
  if (g.has_dense_adjacency()) {
    const int d = diameter_dense(g);
    r.details["two_hop_kernel"] = d;
    if (d != 2) r.violation({{"kernel", "two-hop"}, {"diameter", d}});
  }
  int bfs_d = 0;
  if (exhaustive) {
    bfs_d = diameter(g);
    r.samples = g.size();
  } else {
    const std::uint64_t n = std::min<std::uint64_t>(opt.samples, 32);
    std::vector<VertexId> sources;
    for (std::uint64_t i = 0; i < n; ++i) {
      Rng rng = sample_rng(opt.seed, i);
      sources.push_back(static_cast<VertexId>(rng() % g.size()));
    }
    bfs_d = diameter_from(g, std::span<const VertexId>(sources));
    r.samples = n;
  }
  r.details["bfs"] = bfs_d;
  r.details["sources"] = r.samples;
  if (bfs_d != 2) r.violation({{"kernel", "bfs"}, {"diameter", bfs_d}});
  return r.finish();
}

}  // namespace h3cover
