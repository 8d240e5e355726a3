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

// Verification reports. Schema:
//
//   { "check": str, "field": int, "mode": "exhaustive" | "sample",
//     "samples": int, "violations": int, "witnesses": [ ... ],
//     "details": { ... }, "status": "pass" | "fail" | "not-applicable" }
//
// Witnesses carry coordinates as arrays of scalar bit values: vectors and
// covectors have 4 entries, bivectors 6, symmetric tensors 21.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "h3cover/graphs.hpp"
#include "h3cover/multilinear.hpp"

namespace h3cover {

using json = nlohmann::ordered_json;

enum class Mode { exhaustive, sample };
enum class Status { pass, fail, not_applicable };

std::string to_string(Mode m);
std::string to_string(Status s);

/// Defaults shared by the verifiers and the CLI.
struct VerifyOptions {
  Mode mode = Mode::sample;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultCap;
};

/// A failed sample tagged with its index, so that witnesses found by
/// parallel workers can be put back into a deterministic order.
struct IndexedWitness {
  std::uint64_t index;
  json witness;
};

struct Report {
  static constexpr std::size_t kMaxWitnesses = 8;

  std::string check;
  int field = 0;
  Mode mode = Mode::sample;
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  json witnesses = json::array();
  json details = json::object();
  Status status = Status::pass;

  /// Adds a violation; only the first kMaxWitnesses witnesses are kept.
  void violation(json witness);
  /// Merges the output of a parallel loop: sorts by sample index first.
  void violations_from(std::vector<IndexedWitness> found);
  /// pass iff no violations, unless marked not-applicable.
  Report& finish();
  bool passed() const { return status != Status::fail; }
  json to_json() const;
};

Report not_applicable(std::string check, int field, std::string reason);

json to_json(const Vector& v);
json to_json(const Covector& h);
json to_json(const Bivector& b);
json to_json(const SymTensor& s);
json to_json(const NElement& n);
json to_json(const AffineVertex& a);
json to_json(const ProjVertex& p);

/// Runs fn(i, rng) for every sample index i < n, each with its own stream
/// sample_rng(seed, i); fn returns a witness for a violation or nullopt.
/// Witnesses come back sorted by index, so the result does not depend on the
/// thread count. `parallel = false` runs the same loop serially.
template <class Fn>
std::vector<IndexedWitness> run_samples(std::uint64_t n, std::uint64_t seed, Fn&& fn,
                                        bool parallel = true) {
  std::vector<IndexedWitness> found;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel if (parallel)
  {
    std::vector<IndexedWitness> local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      const auto index = static_cast<std::uint64_t>(i);
      Rng rng = sample_rng(seed, index);
      try {
        if (auto w = fn(index, rng)) local.push_back({index, std::move(*w)});
      } catch (const std::exception& e) {
        local.push_back({index, json{{"sample", index}, {"error", e.what()}}});
      }
    }
#pragma omp critical(h3cover_run_samples)
    for (auto& w : local) found.push_back(std::move(w));
  }
  std::sort(found.begin(), found.end(),
            [](const IndexedWitness& a, const IndexedWitness& b) { return a.index < b.index; });
  return found;
}

/// Aggregates several reports; status is the worst of the parts.
json combine(const std::string& check, int field, const std::vector<Report>& parts);

}  // namespace h3cover
