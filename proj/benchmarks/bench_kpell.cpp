// Copyright 2026 The kpell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "kpell/counting.hpp"
#include "kpell/embed.hpp"
#include "kpell/graph.hpp"
#include "kpell/metrics.hpp"

namespace {

using namespace kpell;

void BM_BuildKPell(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0)), k = static_cast<unsigned>(state.range(1));
  std::size_t vertices = 0;
  for (auto _ : state) {
    auto g = build_kpell_graph(n, k);
    vertices = g.num_vertices();
    benchmark::DoNotOptimize(g);
  }
  state.counters["vertices"] = static_cast<double>(vertices);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * vertices));
}
BENCHMARK(BM_BuildKPell)->Args({10, 2})->Args({14, 2})->Args({8, 3})->Args({6, 6})->Unit(benchmark::kMillisecond);

void BM_BuildFibCube(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_fib_cube(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BuildFibCube)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_EccentricityBounded(benchmark::State& state) {
  auto g = build_kpell_graph(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  std::uint64_t runs = 0;
  for (auto _ : state) runs = eccentricity_profile(g, 1).bfs_runs;
  state.counters["bfs_runs"] = static_cast<double>(runs);
}
BENCHMARK(BM_EccentricityBounded)->Args({8, 2})->Args({10, 2})->Args({7, 3})->Unit(benchmark::kMillisecond);

void BM_EccentricityExhaustive(benchmark::State& state) {
  auto g = build_kpell_graph(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(eccentricity_profile_exhaustive(g, 1));
}
BENCHMARK(BM_EccentricityExhaustive)->Args({8, 2})->Args({7, 3})->Unit(benchmark::kMillisecond);

void BM_CubeBruteForce(benchmark::State& state) {
  auto g = build_kpell_graph(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(cube_polynomial_bruteforce(g, {5'000, 40, 1}));
}
BENCHMARK(BM_CubeBruteForce)->Args({9, 2})->Args({7, 3})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_CubeRecurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cube_polynomial_recurrence(static_cast<unsigned>(state.range(0)), 5));
}
BENCHMARK(BM_CubeRecurrence)->Arg(20)->Arg(100);

void BM_CubeClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cube_polynomial_closed_form(static_cast<unsigned>(state.range(0)), 5));
}
BENCHMARK(BM_CubeClosedForm)->Arg(20)->Arg(100);

void BM_MedianSample(benchmark::State& state) {
  auto g = build_kpell_graph(7, 3);
  MedianOptions o;
  o.sample_size = static_cast<std::uint64_t>(state.range(0));
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify_median_graph(g, o));
}
BENCHMARK(BM_MedianSample)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_EmbeddingCertificate(benchmark::State& state) {
  auto g = build_kpell_graph(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_embedding(g, 1));
}
BENCHMARK(BM_EmbeddingCertificate)->Args({10, 2})->Args({6, 4})->Unit(benchmark::kMillisecond);

void BM_HamiltonianPath(benchmark::State& state) {
  auto g = build_kpell_graph(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_path(g));
}
BENCHMARK(BM_HamiltonianPath)->Args({11, 2})->Args({8, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
