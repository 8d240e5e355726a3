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
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "h3cover/construction.hpp"

namespace h3cover {

VertexId standard_root(const ProjectiveGraph& g) {
  return *g.index_of(ProjVertex{e(1), f(1)});
}

NComponent cover_component(const ProjectiveGraph& g, VertexId root, std::size_t cap) {
  const CoverVoltage ell(g.field());
  return component_of<NElementHash>(g, ell.on_u(g), LiftVertex<NElement>{root, NElement{}}, cap);
}

namespace {

void add_part(Report& r, const std::string& name, const Report& part) {
  r.details["parts"][name] = part.to_json();
  r.samples += part.samples;
  if (!part.passed()) r.violation({{"part", name}, {"violations", part.violations}});
}

// The explicit component over GF(2).
Report explicit_component(const ProjectiveGraph& g, std::size_t cap) {
  const Field& F = g.field();
  Report r;
  r.check = "cover-component";
  r.field = F.order();
  r.mode = Mode::exhaustive;
  const std::size_t fiber = std::size_t{1} << (6 * F.degree());
  const NComponent c = cover_component(g, standard_root(g), cap);
  std::size_t bad_fibers = 0;
  for (const auto& fb : c.fibers)
    if (fb.size() != fiber) ++bad_fibers;
  std::vector<VertexId> all(c.size());
  std::iota(all.begin(), all.end(), VertexId{0});
  const LocalIsoResult iso = verify_local_isomorphism(g, c, std::span<const VertexId>(all));
  const auto dist = bfs(c.graph, 0);
  const bool connected = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
  const std::size_t want = g.size() * fiber;
  r.samples = c.size();
  r.details["vertices"] = c.size();
  r.details["expected_vertices"] = want;
  r.details["fiber_size"] = fiber;
  r.details["edges"] = c.graph.edge_count();
  r.details["expected_edges"] = want * g.degree() / 2;
  r.details["local_isomorphism_checked"] = iso.checked;
  r.details["connected"] = connected;
  if (c.size() != want) r.violation({{"vertices", c.size()}});
  if (bad_fibers) r.violation({{"fibers_of_wrong_size", bad_fibers}});
  if (iso.failures) r.violation({{"local_isomorphism_failures", iso.failures}, {"first", iso.failing}});
  if (c.graph.edge_count() != want * g.degree() / 2) r.violation({{"edges", c.graph.edge_count()}});
  if (!connected) r.violation({{"connected", false}});
  return r.finish();
}

// Coset argument: the fiber over b of the component of (root, 0) is
// t(b) + M', where t(b) is the voltage of any root-b path and M' the group of
// closed-walk voltages at the root. Random root-b walks must all land in
// t(b) + M and their differences must generate M.
Report coset_fibers(const ProjectiveGraph& g, std::uint64_t seed) {
  const Field& F = g.field();
  const int k = F.degree();
  const CoverVoltage ell(F);
  const auto on_u = ell.on_u(g);
  Report r;
  r.check = "cover-fibers";
  r.field = F.order();
  r.mode = Mode::sample;
  const VertexId root = standard_root(g);
  const SpanningTree tree = bfs_tree(g, root);
  const auto t = tree_voltages(g, on_u, tree);
  constexpr int kBases = 10;
  constexpr int kWalks = 200;
  json fibers = json::array();
  for (int bi = 0; bi < kBases; ++bi) {
    Rng rng = sample_rng(seed, static_cast<std::uint64_t>(bi));
    const auto b = static_cast<VertexId>(rng() % g.size());
    F2Span diffs(kSymDim * static_cast<std::size_t>(k));
    for (int wi = 0; wi < kWalks; ++wi) {
      std::vector<VertexId> walk{root};
      const int steps = 2 + static_cast<int>(rng() % 5);
      for (int s = 0; s < steps; ++s) {
        std::vector<VertexId> nb;
        g.for_each_neighbor(walk.back(), [&](VertexId u) { nb.push_back(u); });
        walk.push_back(nb[rng() % nb.size()]);
      }
      const auto tail = shortest_path(g, walk.back(), b);
      walk.insert(walk.end(), tail.begin() + 1, tail.end());
      const NElement d = path_voltage(g, on_u, std::span<const VertexId>(walk)) + t[b];
      ++r.samples;
      if (!in_w2_plus_u(d.rep())) {
        r.violation({{"base", to_json(g.vertex(b))}, {"difference", to_json(d)}});
        continue;
      }
      diffs.insert(to_bits(d.rep(), k));
    }
    const std::size_t size = std::size_t{1} << diffs.rank();
    fibers.push_back({{"base", b}, {"rank", diffs.rank()}, {"fiber_size", size}});
    if (diffs.rank() != 6 * static_cast<std::size_t>(k))
      r.violation({{"base", b}, {"rank", diffs.rank()}, {"expected", 6 * k}});
  }
  r.details["fibers"] = std::move(fibers);
  r.details["expected_fiber_size"] = std::size_t{1} << (6 * k);
  return r.finish();
}

// lambda(gh) + lambda(g)^h + lambda(h) in M for 10 random SL_4 elements.
Report closure(const ProjectiveGraph& g, std::uint64_t seed) {
  const Field& F = g.field();
  const CoverVoltage ell(F);
  Rng rng = sample_rng(seed, 0x5eedu);
  std::vector<Matrix4> gs;
  for (int i = 0; i < 10; ++i) gs.push_back(random_sl4(F, rng));
  return stabilizer_closure_check(g, ell.on_u(g), standard_root(g), std::span<const Matrix4>(gs),
                                  [](const NElement& n) { return in_w2_plus_u(n.rep()); });
}

}  // namespace

Report verify_main_theorem(const Field& F, const VerifyOptions& opt) {
  Report r;
  r.check = "main-theorem";
  r.field = F.order();
  r.mode = F.order() == 2 ? Mode::exhaustive : Mode::sample;
  r.details["parts"] = json::object();
  VerifyOptions sub = opt;
  sub.mode = F.order() == 2 ? Mode::exhaustive : Mode::sample;
  add_part(r, "reductive", verify_reductive(F, sub));
  add_part(r, "triangles", verify_triangles(F, sub));
  add_part(r, "cycles", verify_cycle_span(F, sub));
  const bool small = ProjectiveGraph::vertex_count(F) <= opt.cap && F.order() <= 4;
  if (F.order() == 2) {
    const ProjectiveGraph g(F, opt.cap);
    add_part(r, "component", explicit_component(g, opt.cap));
    add_part(r, "closure", closure(g, opt.seed));
  } else if (small) {
    const ProjectiveGraph g(F, opt.cap);
    add_part(r, "fibers", coset_fibers(g, opt.seed));
    add_part(r, "closure", closure(g, opt.seed));
  }
  r.details["cover_degree"] = std::size_t{1} << (6 * F.degree());
  return r.finish();
}

// ---------------------------------------------------------------------------
// Export.

ExportedGraph export_base_graph(const Field& F, std::size_t cap) {
  const ProjectiveGraph g(F, cap);
  ExportedGraph out;
  out.kind = "base-graph";
  out.field = F.order();
  out.vertices = g.size();
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto id = static_cast<VertexId>(a);
    g.for_each_neighbor(id, [&](VertexId b) {
      if (id < b) out.edges.emplace_back(id, b);
    });
    const ProjVertex p = g.vertex(id);
    out.vertex_data.push_back({{"id", a}, {"v", to_json(p.v)}, {"h", to_json(p.h)}});
  }
  return out;
}

ExportedGraph export_cover(const Field& F, std::size_t cap) {
  const ProjectiveGraph g(F, cap);
  const int k = F.degree();
  // The component is an |F|^6-fold cover; fail before building most of it.
  if ((g.size() << (6 * k)) > cap)
    throw std::length_error("export_cover: the cover has " + std::to_string(g.size() << (6 * k)) +
                            " vertices, over the cap of " + std::to_string(cap));
  const NComponent c = cover_component(g, standard_root(g), cap);
  const std::uint64_t fiber = std::uint64_t{1} << (6 * k);
  // Reference tag of each fiber: its first vertex in BFS order.
  std::vector<VertexId> ref(g.size(), kNoVertex);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (ref[c.vertices[i].base] == kNoVertex) ref[c.vertices[i].base] = static_cast<VertexId>(i);
  std::vector<std::uint64_t> label(c.size());
  std::vector<std::uint64_t> coords(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& x = c.vertices[i];
    const NElement d = x.tag + c.vertices[ref[x.base]].tag;
    if (!in_w2(d.rep())) throw std::logic_error("export_cover: fiber offset outside M");
    const Bits bits = diag_bits(d.rep(), k);
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < bits.size(); ++j)
      if (bits.test(j)) m |= std::uint64_t{1} << j;
    coords[i] = m;
    label[i] = x.base * fiber + m;
  }
  std::vector<std::uint64_t> sorted = label;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("export_cover: labels are not unique");
  if (!sorted.empty() && sorted.back() > std::numeric_limits<VertexId>::max())
    throw std::length_error("export_cover: labels exceed 32 bits");

  ExportedGraph out;
  out.kind = "cover";
  out.field = F.order();
  out.vertices = c.size();
  for (const auto& [a, b] : c.graph.edges()) {
    auto la = static_cast<VertexId>(label[a]);
    auto lb = static_cast<VertexId>(label[b]);
    if (la > lb) std::swap(la, lb);
    out.edges.emplace_back(la, lb);
  }
  std::sort(out.edges.begin(), out.edges.end());
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return label[a] < label[b]; });
  for (std::size_t i : order)
    out.vertex_data.push_back({{"id", label[i]}, {"base", c.vertices[i].base}, {"m", coords[i]}});
  return out;
}

std::string format_graph(const ExportedGraph& g, ExportFormat fmt) {
  if (fmt == ExportFormat::json) {
    json out;
    out["kind"] = g.kind;
    out["field"] = g.field;
    out["vertices"] = g.vertices;
    out["edge_count"] = g.edges.size();
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    out["edges"] = std::move(edges);
    out["vertex_data"] = g.vertex_data;
    return out.dump(1) + "\n";
  }
  std::ostringstream os;
  os << "# h3cover " << g.kind << " field=" << g.field << " vertices=" << g.vertices
     << " edges=" << g.edges.size() << "\n";
  for (const auto& [a, b] : g.edges) os << a << ' ' << b << '\n';
  return os.str();
}

SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::size_t n = 0;
  bool header = false;
  std::vector<std::pair<VertexId, VertexId>> edges;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("vertices=");
      if (pos != std::string::npos) {
        n = std::stoull(line.substr(pos + 9));
        header = true;
      }
      continue;
    }
    std::istringstream ls(line);
    std::uint64_t a = 0, b = 0;
    if (!(ls >> a >> b)) throw std::invalid_argument("parse_edge_list: bad line '" + line + "'");
    edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  if (!header) throw std::invalid_argument("parse_edge_list: missing header");
  // Labels may be sparse; the vertex range is the larger of the header count
  // and the largest label.
  for (const auto& [a, b] : edges) n = std::max<std::size_t>(n, std::max(a, b) + std::size_t{1});
  return SimpleGraph(n, edges);
}

}  // namespace h3cover
