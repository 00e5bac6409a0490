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

#ifndef KPELL_METRICS_HPP_
#define KPELL_METRICS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kpell/graph.hpp"

namespace kpell {

inline constexpr std::uint64_t kDefaultBfsBudget = 200'000;
inline constexpr std::uint64_t kDefaultMatrixBudget = 5'000;
inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct EccentricityProfile {
  std::vector<std::uint32_t> ecc;
  std::uint32_t radius = 0;
  std::uint32_t diameter = 0;
  std::vector<Vertex> center;
  std::vector<Vertex> periphery;
  // Number of breadth-first searches actually run.
  std::uint64_t bfs_runs = 0;
};

// Exact distances from `source`. Throws InternalError if some vertex is
// unreachable.
std::vector<std::uint32_t> bfs_distances(const LabeledGraph& g, Vertex source);

// Exact eccentricities of every vertex. Uses lower/upper eccentricity
// bounds from completed searches (plus the word-reversal automorphism) to
// skip most sources; every value is still exact. `threads` = 0 picks the
// hardware concurrency. Throws BudgetError above `budget` vertices.
EccentricityProfile eccentricity_profile(const LabeledGraph& g, unsigned threads = 0,
                                         std::uint64_t budget = kDefaultBfsBudget);
// One search from every vertex. Slow; kept as the reference.
EccentricityProfile eccentricity_profile_exhaustive(const LabeledGraph& g, unsigned threads = 0,
                                                    std::uint64_t budget = kDefaultBfsBudget);

// floor(kn/2) and nk - ceil(n/2).
std::uint32_t closed_form_radius(unsigned n, unsigned k);
std::uint32_t closed_form_diameter(unsigned n, unsigned k);

// Indices of enumerate_center_family(n, k) in g. Requires n >= 2.
std::vector<Vertex> predicted_center(const LabeledGraph& g);

// k even: checks edge by edge that k/2 -> 0, k/2-1 -> 1 maps the subgraph
// induced by `center` isomorphically onto the Fibonacci cube of the same
// length. Throws DomainError for odd k.
bool center_induces_fibonacci_cube(const LabeledGraph& g, std::span<const Vertex> center);

// The unique vertex on shortest paths between all three pairs, or nullopt
// if there is none or more than one.
std::optional<Vertex> median(const LabeledGraph& g, Vertex x, Vertex y, Vertex z);

struct MedianOptions {
  std::uint64_t exhaustive_limit = 300;
  std::uint64_t sample_size = 100'000;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t matrix_budget = kDefaultMatrixBudget;
  unsigned threads = 0;
};

struct MedianReport {
  bool exhaustive = false;
  std::uint64_t checked = 0;
  bool all_unique = true;
  std::uint64_t seed = 0;
  // First offending triple in check order.
  std::optional<std::array<Vertex, 3>> counterexample;
};

// Checks triples of distinct vertices: all of them up to
// `exhaustive_limit` vertices, else a seeded uniform sample. Needs a full
// distance matrix, so throws BudgetError above `matrix_budget` vertices.
MedianReport verify_median_graph(const LabeledGraph& g, const MedianOptions& options = {});

// Concatenations of 00 and kk blocks; for odd n with one extra 0 or k-1
// inserted between blocks. Sorted.
std::vector<KPellWord> predicted_periphery(unsigned n, unsigned k);
bool verify_periphery_shape(const LabeledGraph& g, const EccentricityProfile& profile);

}  // namespace kpell

#endif  // KPELL_METRICS_HPP_
