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

// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "h3cover/construction.hpp"

using namespace h3cover;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void need(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!note.empty()) note += "; ";
    note += what;
  }
  void need(const Report& r) {
    need(r.status == Status::pass,
         r.check + " GF(" + std::to_string(r.field) + ") " + to_string(r.status) + " with " +
             std::to_string(r.violations) + " violations");
  }
};

VerifyOptions exhaustive() { return {Mode::exhaustive, 0, 1, kDefaultCap}; }
VerifyOptions sampled(std::uint64_t n, std::uint64_t seed = 1) { return {Mode::sample, n, seed, kDefaultCap}; }

constexpr std::uint64_t kSamples = 100'000;

Outcome c1_phi() {
  Outcome o;
  for (int q : {2, 4, 8, 16}) {
    const Field F = Field::from_order(q);
    o.need(verify_phi(F));
    o.need(phi_consistency_check(F), "phi consistency GF(" + std::to_string(q) + ")");
  }
  return o;
}

Outcome c2_triangles() {
  Outcome o;
  const Report r2 = verify_triangles(Field(1), exhaustive());
  o.need(r2);
  o.need(r2.samples == 3360, "GF(2) triangle count " + std::to_string(r2.samples));
  for (int k : {2, 3}) {
    const Report r = verify_triangles(Field(k), sampled(kSamples));
    o.need(r);
    o.need(r.samples >= kSamples, "too few triangles");
  }
  return o;
}

Outcome c3_quadrangles() {
  Outcome o;
  o.need(verify_quadrangles(Field(1), exhaustive()));
  o.need(verify_pentagons(Field(1), exhaustive()));
  for (auto* fn : {&verify_quadrangles, &verify_pentagons}) {
    const Report r = fn(Field(2), sampled(kSamples));
    o.need(r);
    o.need(r.samples >= kSamples, r.check + ": too few samples");
  }
  return o;
}

Outcome c4_cycle_span() {
  Outcome o;
  for (int k = 1; k <= 3; ++k) {
    const Report r = verify_cycle_span(Field(k), exhaustive());
    o.need(r);
    o.need(r.details.value("rank_mod_u", 0) == 6 * k, "rank mod U for k=" + std::to_string(k));
  }
  return o;
}

Outcome c5_cover() {
  Outcome o;
  const Field F(1);
  const ProjectiveGraph g(F);
  const NComponent c = cover_component(g, standard_root(g), kDefaultCap);
  o.need(c.size() == 7680, "component has " + std::to_string(c.size()) + " vertices");
  bool fibers = true;
  for (const auto& fb : c.fibers) fibers = fibers && fb.size() == 64;
  o.need(fibers, "fiber size");
  std::vector<VertexId> all(c.size());
  for (VertexId i = 0; i < all.size(); ++i) all[i] = i;
  const auto iso = verify_local_isomorphism(g, c, std::span<const VertexId>(all));
  o.need(iso.checked == 7680 && iso.failures == 0, "local isomorphism");
  const ExportedGraph ex = export_cover(F);
  o.need(ex.vertices == 7680, "exported vertices");
  o.need(ex.edges.size() == 107520, "exported edges " + std::to_string(ex.edges.size()));
  const SimpleGraph sg = parse_edge_list(format_graph(ex, ExportFormat::edgelist));
  std::size_t reached = 0;
  for (int d : bfs(sg, ex.edges.front().first)) reached += d >= 0;
  o.need(reached == 7680, "exported cover is not connected");
  o.need(verify_main_theorem(F, exhaustive()));
  return o;
}

Outcome c6_generators() {
  Outcome o;
  for (int k = 1; k <= 4; ++k) {
    const Field F(k);
    o.need(verify_w2_generators(F));
    // base pattern, every unit
    const auto units = F.units();
    for (const auto& c : w2_generator_cycles(F, units))
      if (c.pattern == 0)
        o.need(c.expected == scale(F, c.lambda, square(F, w(1))) &&
                   closed_walk_voltage(CoverVoltage(F), c.walk) == c.expected,
               "base quadrangle for lambda=" + std::to_string(c.lambda.bits));
  }
  return o;
}

Outcome per_field(const std::function<Report(const Field&)>& fn) {
  Outcome o;
  for (int q : {4, 8, 16}) o.need(fn(Field::from_order(q)));
  return o;
}

Outcome c11_reductive() {
  Outcome o;
  o.need(verify_reductive(Field(1), exhaustive()));
  o.need(verify_equivariance(Field(1), exhaustive()));
  o.need(verify_reductive(Field(2), sampled(kSamples)));
  o.need(verify_equivariance(Field(2), sampled(kSamples)));
  for (int k = 1; k <= 4; ++k) o.need(verify_u_invariance(Field(k), 1));
  return o;
}

Outcome c12_diameter() {
  Outcome o;
  for (int k : {1, 2}) {
    const Report r = verify_diameter(Field(k), exhaustive());
    o.need(r);
    o.need(r.mode == Mode::exhaustive && r.details.value("bfs", 0) == 2, "BFS diameter");
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "phi basis table and pairing", 1, c1_phi},
      {2, "triangle voltages equal U", 120, c2_triangles},
      {3, "quadrangle and pentagon voltages in W2 + <U>", 300, c3_quadrangles},
      {4, "cycle span is the image of W2, k = 1, 2, 3", 120, c4_cycle_span},
      {5, "GF(2) cover: 7680 vertices, fibers 64, 107520 edges", 60, c5_cover},
      {6, "generator quadrangles span W2", 10, c6_generators},
      {7, "dart voltage and lambda(A_x)", 10, [] { return per_field(verify_dart_and_lambda); }},
      {8, "cocycle f(A_x, A_y) = xy w5^2", 10, [] { return per_field([](const Field& F) { return verify_cocycle(F); }); }},
      {9, "order-2 solution space w3^2 + S", 10, [] { return per_field([](const Field& F) { return verify_order2(F); }); }},
      {10, "extension does not split", 600,
       [] { return per_field([](const Field& F) { return verify_nonsplit(F, VerifyOptions{}); }); }},
      {11, "reductivity, equivariance, U invariance", 120, c11_reductive},
      {12, "diameter two over GF(2) and GF(4)", 120, c12_diameter},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) o.need(false, "over the time limit");
    failed += !o.ok;
    std::printf("%s  %2d  %-52s %8.2f s (limit %g s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s,
                c.limit_s, o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
