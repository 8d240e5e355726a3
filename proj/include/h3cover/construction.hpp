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

// The voltage assignment on the affine graph
//
//   ell(v1 (x) h1, v2 (x) h2) = h1(v1)^-1 h2(v2)^-1 (v1 ^ v2)(h1 ^ h2)^phi
//
// with values in S_2(W), its quotient ell^U with values in N, and the checks
// built on them: closed walks land in W^(2) + <U>, the cycle span is the image
// M of W^(2), the lift is an |F|^6-fold cover, and the extension of SL_4(F)
// by M obtained from it does not split (|F| > 2).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "h3cover/f2.hpp"
#include "h3cover/field.hpp"
#include "h3cover/graphs.hpp"
#include "h3cover/linalg.hpp"
#include "h3cover/multilinear.hpp"
#include "h3cover/report.hpp"
#include "h3cover/voltage.hpp"

namespace h3cover {

class CoverVoltage {
 public:
  explicit CoverVoltage(const Field& F) : field_(F) {}

  const Field& field() const noexcept { return field_; }

  /// Throws std::invalid_argument unless a and b are adjacent vertices.
  SymTensor ell(const AffineVertex& a, const AffineVertex& b) const;
  NElement ell_u(const AffineVertex& a, const AffineVertex& b) const {
    return project_n(ell(a, b));
  }
  /// No adjacency check.
  SymTensor ell_unchecked(const AffineVertex& a, const AffineVertex& b) const;

  /// The same voltage on vertex ids of H3(F), evaluated at the normalized
  /// representatives (ell does not depend on the representatives).
  auto on(const ProjectiveGraph& g) const {
    return [this, &g](VertexId a, VertexId b) {
      return ell_unchecked(to_affine(g.vertex(a)), to_affine(g.vertex(b)));
    };
  }
  auto on_u(const ProjectiveGraph& g) const {
    return [this, &g](VertexId a, VertexId b) {
      return project_n(ell_unchecked(to_affine(g.vertex(a)), to_affine(g.vertex(b))));
    };
  }

 private:
  Field field_;
};

/// Voltage of the path a0, ..., a(n-1). Throws std::invalid_argument when
/// consecutive vertices are not adjacent.
SymTensor walk_voltage(const CoverVoltage& ell, std::span<const AffineVertex> path);
/// Voltage of the closed walk a0, a1, ..., a(n-1), a0 (n >= 2).
SymTensor closed_walk_voltage(const CoverVoltage& ell, std::span<const AffineVertex> walk);
/// Throws std::invalid_argument for a repeated vertex as well.
SymTensor triangle_voltage(const CoverVoltage& ell, const AffineVertex& a, const AffineVertex& b,
                           const AffineVertex& c);

/// Whether the exhaustive variant of `check` is offered for this field.
bool exhaustive_supported(const std::string& check, int field_order);

Report verify_triangles(const Field& F, const VerifyOptions& opt);
Report verify_quadrangles(const Field& F, const VerifyOptions& opt);
Report verify_pentagons(const Field& F, const VerifyOptions& opt);
/// Sampled closed walks of every length in [min_len, max_len].
Report verify_long_walks(const Field& F, int min_len, int max_len, const VerifyOptions& opt);

/// A quadrangle with v0 = v2 and linearly independent h0..h3, together with
/// D (gamma (x3 ^ x4)^2 + beta (x1 ^ x4)^2), where (x_i) is the basis dual to
/// (h_i(v_i)^-1 h_i), x4 = x0 + x2, D = (x0 ^ x1 ^ x2 ^ x3)^-1,
/// beta = eps(1,3), gamma = eps(3,1) and eps(i, j) = h_i(v_i)^-1 h_i(v_j).
struct SpecialQuadrangle {
  std::array<AffineVertex, 4> walk;
  Scalar beta, gamma, d;
  SymTensor predicted;
};
std::optional<SpecialQuadrangle> random_special_quadrangle(const Field& F, Rng& rng);

struct GeneratorCycle {
  std::array<AffineVertex, 4> walk;
  int pattern = 0;  // index into the 24 permutations of e1..e4
  Scalar lambda;
  SymTensor expected;  // lambda * w_s^2 for the slot s hit by the pattern
};
/// The quadrangle (v1 h2, v2 h1, v1 h3, v3 h1) with v1 = e1, v2 = e3,
/// v3 = e3 + lambda e2, h1 = f3, h2 = f1, h3 = f1 + f4, conjugated by every
/// permutation of the basis, for lambda in the F2 basis of F (or `lambdas`).
std::vector<GeneratorCycle> w2_generator_cycles(const Field& F,
                                                std::span<const Scalar> lambdas = {});
Report verify_w2_generators(const Field& F);

// Cycle span of the voltage on H3(F).

struct CycleSpan {
  int degree = 0;
  std::size_t rank_with_u = 0;      // F2-rank of generators together with U
  std::size_t edges = 0;            // edges whose fundamental cycle was checked
  std::size_t outside_w2_u = 0;     // generators not in W^(2) + <U>
  std::vector<Bits> basis;          // basis of the span (with U), packed SymTensors
  std::vector<std::pair<VertexId, VertexId>> outside;  // first few offending edges
};

/// Serial reference: fundamental_cycle_generators on H3(F) plus F2Span.
CycleSpan cycle_span_reference(const ProjectiveGraph& g);
/// Kernel for degree <= 3 with tensors packed in one machine word; parallel
/// over point pairs (OpenMP).
CycleSpan cycle_span_fast(const ProjectiveGraph& g);
/// Span equals W^(2) + <U>: rank 6k + 1 with every generator inside.
Report verify_cycle_span(const Field& F, const VerifyOptions& opt, bool use_reference = false);

// Diameter of H3(F).

/// Bit-parallel two-step BFS over the dense adjacency (|F| <= 4). Returns
/// the largest distance found, capped at 3 meaning "more than 2".
int diameter_dense(const ProjectiveGraph& g, bool parallel = true);
Report verify_diameter(const Field& F, const VerifyOptions& opt);

// Main theorem.

using NComponent = LiftComponent<NElement, NElementHash>;

/// The component of (root, 0) in the lift of H3(F) under ell^U.
NComponent cover_component(const ProjectiveGraph& g, VertexId root, std::size_t cap);
/// ((<e1>, <f1>)).
VertexId standard_root(const ProjectiveGraph& g);
Report verify_main_theorem(const Field& F, const VerifyOptions& opt);

Report verify_reductive(const Field& F, const VerifyOptions& opt);
/// Sampled SL_4 elements (100 exhaustive on GF(2); 20 in sample mode).
Report verify_equivariance(const Field& F, const VerifyOptions& opt);
/// U fixed by 100 random SL_4 elements, scaled by det for 20 random GL_4
/// elements, and equal to delta of 50 random unimodular bases.
Report verify_u_invariance(const Field& F, std::uint64_t seed);
/// The six phi images from the basis table and phi_consistency_check.
Report verify_phi(const Field& F);

// The subgroup A = {A_x : x in <1, alpha>}.

/// Fixes e2, e4; e1 -> e1 + x e2, e3 -> e3 + x e4.
Matrix4 ax_matrix(const Field& F, Scalar x);
std::array<Bivector, 6> ax_action_table(const Field& F, Scalar x);
/// The table as displayed: w1, w2 + x w3 + x w4 + x^2 w5, w3 + x w5,
/// w4 + x w5, w5, w6.
std::array<Bivector, 6> ax_expected_table(const Field& F, Scalar x);
/// {0, 1, alpha, alpha + 1}.
std::array<Scalar, 4> subgroup_f(const Field& F, Scalar alpha);

/// u = (e3, f3) and v_x = (e1 + x e2, f1).
AffineVertex vertex_u();
AffineVertex vertex_vx(const Field& F, Scalar x);
/// lambda(A_x): voltage of the path v_x, u, v_0 (v_x is the image of v_0).
SymTensor lambda_ax(const CoverVoltage& ell, Scalar x);
/// lambda(A_(x+y)) + lambda(A_x)^(A_y) + lambda(A_y).
SymTensor cocycle_f(const CoverVoltage& ell, Scalar x, Scalar y);

Report verify_dart_and_lambda(const Field& F);
Report verify_cocycle(const Field& F, std::optional<Scalar> alpha = std::nullopt);

/// An affine subspace of M = W^(2) over F2, in restriction-of-scalars
/// coordinates of the diagonal: slot s, bit j -> index s * k + j.
struct AffineSubspaceF2 {
  Bits particular;
  std::vector<Bits> kernel;
};
Bits diag_bits(const SymTensor& s, int degree);
SymTensor diag_from_bits(const Bits& b, int degree);

/// Solutions m in M of m^(A_x) + m = x^2 w5^2; nullopt if inconsistent.
std::optional<AffineSubspaceF2> order2_solution_space(const Field& F, Scalar x);
/// S = <w1^2, w3^2 + w4^2, w5^2, w6^2>_F as F2 basis of diagonal bits.
std::vector<Bits> subspace_s(const Field& F);
Report verify_order2(const Field& F, std::optional<Scalar> alpha = std::nullopt);

struct SplittingResult {
  AffineSystemF2 system{0};
  std::optional<F2Inconsistency> certificate;
};
/// Unknowns c(1), c(alpha) in M and three slack bits for "= 0 in N".
SplittingResult splitting_system(const Field& F, Scalar alpha);

/// Exhaustive search over all (c(1), c(alpha)) in M^2 for a lift of A to a
/// subgroup; returns the number of lifts found. Parallel over c(1).
std::uint64_t brute_force_lifts(const Field& F, Scalar alpha, bool parallel = true);
Report verify_nonsplit(const Field& F, const VerifyOptions& opt);

// Export.

enum class ExportFormat { edgelist, json };

struct ExportedGraph {
  std::string kind;  // "base-graph" or "cover"
  int field = 0;
  std::size_t vertices = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;  // a < b, sorted
  json vertex_data = json::array();                  // per vertex, for JSON output
};

ExportedGraph export_base_graph(const Field& F, std::size_t cap = kDefaultCap);
/// Component of ((<e1>, <f1>), 0) for GF(2). Vertex id = base * 64 + m, where
/// m is the diagonal bit vector of tag - tag(reference of that fiber) .
ExportedGraph export_cover(const Field& F, std::size_t cap = kDefaultCap);
std::string format_graph(const ExportedGraph& g, ExportFormat fmt);
/// Parses the edge-list format back.
SimpleGraph parse_edge_list(const std::string& text);

}  // namespace h3cover
