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

#ifndef KPELL_COUNTING_HPP_
#define KPELL_COUNTING_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>

#include "kpell/bigint.hpp"
#include "kpell/graph.hpp"
#include "kpell/polynomial.hpp"
#include "kpell/seqs.hpp"

namespace kpell {

// |E(Pi(n,k))| by E(n) = k E(n-1) + E(n-2) + F(n+1,k) - F(n,k),
// E(0) = 0, E(1) = k - 1.
BigInt edge_count_recurrence(unsigned n, unsigned k);
// sum_{i=0..n} F(i,k) (F(n-i+2,k) - F(n-i+1,k)).
BigInt edge_count_sum_formula(unsigned n, unsigned k);

struct CubeOptions {
  std::uint64_t vertex_budget = 5'000;
  std::size_t max_degree = 40;
  unsigned threads = 0;
};

// Counts induced hypercubes directly. Each cube is grown from its smallest
// vertex v by adding neighbors of v in increasing index order, one
// dimension at a time; the copy of the current cube across the new
// direction is searched vertex by vertex and the union must be induced.
IntPolynomial cube_polynomial_bruteforce(const LabeledGraph& g, const CubeOptions& options = {});
// C(n) = (k + (k-1)x) C(n-1) + (1 + x) C(n-2), C(0) = 1, C(1) = k + (k-1)x.
IntPolynomial cube_polynomial_recurrence(unsigned n, unsigned k);
// sum_i binom(n-i, i) (k + (k-1)x)^(n-2i) (1 + x)^i.
IntPolynomial cube_polynomial_closed_form(unsigned n, unsigned k);
// 1 / (1 - (k + (k-1)x) t - (1 + x) t^2).
PolyRationalGF cube_polynomial_gf(unsigned k);

// Degree of w in Pi(n,k) read off the word. For k >= 3:
//   |t|_0 + 2 (|t|_1 + ... + |t|_{k-1}) + |t|_k / 2 - r,
// r the number of runs of k-1. For k = 2: |t|_0 + |t|_1 + |t|_2 / 2 + e,
// e the number of positions i with t_i t_{i+1} = 11 (overlaps included).
std::size_t degree_formula(std::span<const Letter> w, unsigned k);
inline std::size_t degree_formula(const KPellWord& w) { return degree_formula(w.letters(), w.k()); }

struct DegreeCensus {
  std::map<std::size_t, std::uint64_t> histogram;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};
DegreeCensus degree_census(const LabeledGraph& g);

// n (n-1)^(k-2) + sum_{l=1..n} (n-l+1) (n-l)^(k-2), as printed in the
// literature for the number of vertices of degree 2n - 1.
BigInt delta_minus_one_formula(unsigned n, unsigned k);
// The same expression with base and exponent swapped:
// n (k-2)^(n-1) + sum_{l=1..n} (n-l+1) (k-2)^(n-l).
BigInt delta_minus_one_swapped(unsigned n, unsigned k);
// Either exactly one 0 and no k-1 or k, or no 0 or k and a single run of k-1.
bool has_delta_minus_one_shape(std::span<const Letter> w, unsigned k);

struct DeltaMinusOneRecord {
  unsigned n = 0;
  unsigned k = 0;
  BigInt formula;
  BigInt swapped;
  std::uint64_t census = 0;
  // Degree-(2n-1) vertices are exactly the words of the shape above.
  bool shape_matches = false;
  bool formula_matches() const { return formula == census; }
};
// Requires k >= 3 and n >= 1.
DeltaMinusOneRecord count_degree_delta_minus_1(const LabeledGraph& g);

}  // namespace kpell

#endif  // KPELL_COUNTING_HPP_
