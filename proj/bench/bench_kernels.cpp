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

// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "h3cover/construction.hpp"

using namespace h3cover;

namespace {

const ProjectiveGraph& graph(int k) {
  static const ProjectiveGraph g1{Field(1)};
  static const ProjectiveGraph g2{Field(2)};
  return k == 1 ? g1 : g2;
}

void BM_CycleSpanReference(benchmark::State& st) {
  const auto& g = graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(cycle_span_reference(g).rank_with_u);
}
void BM_CycleSpanFast(benchmark::State& st) {
  const auto& g = graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(cycle_span_fast(g).rank_with_u);
}
BENCHMARK(BM_CycleSpanReference)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycleSpanFast)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DiameterBfs(benchmark::State& st) {
  const auto& g = graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(diameter(g));
}
void BM_DiameterDense(benchmark::State& st) {
  const auto& g = graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(diameter_dense(g, st.range(1) != 0));
}
BENCHMARK(BM_DiameterBfs)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiameterDense)->Args({1, 0})->Args({1, 1})->Args({2, 0})->Args({2, 1})->Unit(benchmark::kMillisecond);

void BM_BruteForceLifts(benchmark::State& st) {
  const Field F(2);
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_lifts(F, F.generator(), st.range(0) != 0));
}
BENCHMARK(BM_BruteForceLifts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SampledTriangles(benchmark::State& st) {
  const Field F(2);
  const CoverVoltage ell(F);
  const bool parallel = st.range(0) != 0;
  for (auto _ : st) {
    auto found = run_samples(
        20'000, 1,
        [&](std::uint64_t, Rng& rng) -> std::optional<json> {
          const AffineVertex a = random_affine_vertex(F, rng);
          const AffineVertex b = random_neighbor(F, a, rng);
          const auto c = random_common_neighbor(F, a, b, rng);
          if (c && triangle_voltage(ell, a, b, *c) == big_u()) return std::nullopt;
          return json{{"bad", true}};
        },
        parallel);
    benchmark::DoNotOptimize(found.size());
  }
}
BENCHMARK(BM_SampledTriangles)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
