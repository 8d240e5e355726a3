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

// h3cover verify <suite> [flags]
// h3cover export <base-graph|cover|report> [flags]
//
// Exit status: 0 pass, 1 a check failed, 2 usage error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h3cover/construction.hpp"

namespace {

using namespace h3cover;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
  int field = 2;
  std::string mode = "sample";
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultCap;
  std::string out;
  std::string format;
};

using Runner = std::function<Report(const Field&, const VerifyOptions&)>;

const std::vector<std::pair<std::string, Runner>>& suites() {
  static const std::vector<std::pair<std::string, Runner>> all{
      {"phi", [](const Field& F, const VerifyOptions&) { return verify_phi(F); }},
      {"u-invariance", [](const Field& F, const VerifyOptions& o) { return verify_u_invariance(F, o.seed); }},
      {"reductive", verify_reductive},
      {"equivariance", verify_equivariance},
      {"triangles", verify_triangles},
      {"quadrangles", verify_quadrangles},
      {"pentagons", verify_pentagons},
      {"walks", [](const Field& F, const VerifyOptions& o) { return verify_long_walks(F, 6, 8, o); }},
      {"w2-generators", [](const Field& F, const VerifyOptions&) { return verify_w2_generators(F); }},
      {"cycles", [](const Field& F, const VerifyOptions& o) { return verify_cycle_span(F, o); }},
      {"diameter", verify_diameter},
      {"main-theorem", verify_main_theorem},
      {"dart", [](const Field& F, const VerifyOptions&) { return verify_dart_and_lambda(F); }},
      {"cocycle", [](const Field& F, const VerifyOptions&) { return verify_cocycle(F); }},
      {"order2", [](const Field& F, const VerifyOptions&) { return verify_order2(F); }},
      {"nonsplit", verify_nonsplit},
  };
  return all;
}

// Checks that are exhaustive by nature, or decide their own mode.
bool mode_free(const std::string& name) {
  return name == "phi" || name == "u-invariance" || name == "w2-generators" || name == "dart" ||
         name == "cocycle" || name == "order2" || name == "nonsplit" || name == "main-theorem";
}

Report run_one(const std::string& name, const Runner& fn, const Field& F, const Config& cfg) {
  VerifyOptions opt;
  opt.mode = cfg.mode == "exhaustive" ? Mode::exhaustive : Mode::sample;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.cap = cfg.cap;
  std::string note;
  if (opt.mode == Mode::exhaustive && !mode_free(name) &&
      (name == "walks" || !exhaustive_supported(name, F.order()))) {
    opt.mode = Mode::sample;
    note = "exhaustive mode is not offered for this check over GF(" + std::to_string(F.order()) +
           "); ran " + std::to_string(opt.samples) + " samples instead";
  }
  Report r = fn(F, opt);
  if (!note.empty()) r.details["note"] = note;
  return r;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << text;
  if (!os) throw std::runtime_error("write to " + path + " failed");
}

// Runs the suite; returns the JSON document and whether nothing failed.
std::pair<json, bool> verify(const std::string& suite, const Config& cfg) {
  const Field F = Field::from_order(cfg.field);
  std::vector<Report> reports;
  for (const auto& [name, fn] : suites()) {
    if (suite != "all" && suite != name) continue;
    std::cerr << "h3cover: " << name << " GF(" << cfg.field << ") ... " << std::flush;
    reports.push_back(run_one(name, fn, F, cfg));
    std::cerr << to_string(reports.back().status) << "\n";
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (suite != "all") return {reports.front().to_json(), ok};
  return {combine("all", cfg.field, reports), ok};
}

int run(int argc, char** argv) {
  CLI::App app{"Voltage-graph covers of the non-incident point-hyperplane graph H3(F)"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "Field order")->check(CLI::IsMember({2, 4, 8, 16}));
    sub->add_option("--seed", cfg.seed, "Seed for every sampled check");
    sub->add_option("--cap", cfg.cap, "Largest graph or lift component to build")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "Output file (default: stdout)");
  };

  std::vector<std::string> names{"all"};
  for (const auto& s : suites()) names.push_back(s.first);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  std::string suite;
  verify_cmd->add_option("suite", suite, "Suite to run")->required()->check(CLI::IsMember(names));
  add_common(verify_cmd);
  verify_cmd->add_option("--mode", cfg.mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  verify_cmd->add_option("--samples", cfg.samples, "Samples per sampled check")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json"}));

  auto* export_cmd = app.add_subcommand("export", "Write a graph or a report");
  std::string what;
  export_cmd->add_option("what", what, "base-graph, cover or report")
      ->required()
      ->check(CLI::IsMember({"base-graph", "cover", "report"}));
  add_common(export_cmd);
  export_cmd->add_option("--mode", cfg.mode, "exhaustive or sample (report only)")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  export_cmd->add_option("--samples", cfg.samples, "Samples per sampled check (report only)")
      ->check(CLI::PositiveNumber);
  export_cmd->add_option("--format", cfg.format, "edgelist or json")
      ->check(CLI::IsMember({"edgelist", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      const auto [doc, ok] = verify(suite, cfg);
      emit(doc.dump(2) + "\n", cfg.out);
      return ok ? kExitPass : kExitFail;
    }
    if (what == "report") {
      if (cfg.format == "edgelist") {
        std::cerr << "h3cover: reports are JSON only\n";
        return kExitUsage;
      }
      const auto [doc, ok] = verify("all", cfg);
      emit(doc.dump(2) + "\n", cfg.out);
      return ok ? kExitPass : kExitFail;
    }
    if (export_cmd->count("--mode") || export_cmd->count("--samples")) {
      std::cerr << "h3cover: --mode and --samples apply to 'export report' only\n";
      return kExitUsage;
    }
    const Field F = Field::from_order(cfg.field);
    const ExportFormat fmt = cfg.format == "json" ? ExportFormat::json : ExportFormat::edgelist;
    const ExportedGraph g = what == "cover" ? export_cover(F, cfg.cap) : export_base_graph(F, cfg.cap);
    emit(format_graph(g, fmt), cfg.out);
    std::cerr << "h3cover: " << what << " GF(" << cfg.field << "): " << g.vertices << " vertices, "
              << g.edges.size() << " edges\n";
    return kExitPass;
  } catch (const std::length_error& e) {
    std::cerr << "h3cover: " << e.what() << " (raise --cap)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "h3cover: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "h3cover: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
