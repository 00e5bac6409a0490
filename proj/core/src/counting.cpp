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

#include "kpell/counting.hpp"

#include <algorithm>
#include <functional>

#include "kpell/error.hpp"
#include "parallel.hpp"

namespace kpell {

BigInt edge_count_recurrence(unsigned n, unsigned k) {
  if (n == 0) return 0;
  const auto f = k_fibonacci_prefix(n + 2, k);
  BigInt older = 0, prev = BigInt(k) - 1;
  for (unsigned m = 2; m <= n; ++m) {
    BigInt next = k * prev + older + f[m + 1] - f[m];
    older = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

BigInt edge_count_sum_formula(unsigned n, unsigned k) {
  const auto f = k_fibonacci_prefix(n + 3, k);
  BigInt sum = 0;
  for (unsigned i = 0; i <= n; ++i) sum += f[i] * (f[n - i + 2] - f[n - i + 1]);
  return sum;
}

namespace {

// Search state for cubes whose smallest vertex is `root`.
class CubeCounter {
 public:
  CubeCounter(const LabeledGraph& g, Vertex root, std::vector<std::uint64_t>& counts)
      : g_(g), root_(root), counts_(counts) {
    for (Vertex u : g.neighbors(root)) {
      if (u > root) up_.push_back(u);
    }
  }

  void run() {
    std::vector<Vertex> cube{root_};
    grow(cube, 0, 0);
  }

 private:
  void grow(const std::vector<Vertex>& cube, unsigned dim, std::size_t first) {
    if (counts_.size() <= dim) counts_.resize(dim + 1, 0);
    ++counts_[dim];
    for (std::size_t t = first; t < up_.size(); ++t) {
      std::vector<Vertex> copy(cube.size());
      copy[0] = up_[t];
      extend(cube, copy, 1, dim, t);
    }
  }

  bool contains(const std::vector<Vertex>& cube, const std::vector<Vertex>& copy, std::size_t filled, Vertex x) const {
    return std::find(cube.begin(), cube.end(), x) != cube.end() ||
           std::find(copy.begin(), copy.begin() + static_cast<std::ptrdiff_t>(filled), x) !=
               copy.begin() + static_cast<std::ptrdiff_t>(filled);
  }

  // copy[mask] must be adjacent to cube[mask] and to copy[mask - b] for
  // every bit b of mask.
  void extend(const std::vector<Vertex>& cube, std::vector<Vertex>& copy, std::size_t mask, unsigned dim,
              std::size_t t) {
    if (mask == cube.size()) {
      std::vector<Vertex> next = cube;
      next.insert(next.end(), copy.begin(), copy.end());
      if (induced(next, dim + 1)) grow(next, dim + 1, t + 1);
      return;
    }
    const std::size_t low = mask & (~mask + 1);
    auto a = g_.neighbors(cube[mask]);
    auto b = g_.neighbors(copy[mask ^ low]);
    std::vector<Vertex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    for (Vertex x : common) {
      if (x <= root_ || contains(cube, copy, mask, x)) continue;
      bool ok = true;
      for (std::size_t rest = mask ^ low; rest != 0 && ok; rest &= rest - 1) {
        const std::size_t bit = rest & (~rest + 1);
        ok = g_.adjacent(x, copy[mask ^ bit]);
      }
      if (!ok) continue;
      copy[mask] = x;
      extend(cube, copy, mask + 1, dim, t);
    }
  }

  // Every vertex has exactly `dim` neighbors inside the set.
  bool induced(const std::vector<Vertex>& set, unsigned dim) const {
    std::vector<Vertex> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    for (Vertex x : set) {
      unsigned inside = 0;
      for (Vertex y : g_.neighbors(x)) {
        if (std::binary_search(sorted.begin(), sorted.end(), y)) ++inside;
      }
      if (inside != dim) return false;
    }
    return true;
  }

  const LabeledGraph& g_;
  Vertex root_;
  std::vector<std::uint64_t>& counts_;
  std::vector<Vertex> up_;
};

}  // namespace

IntPolynomial cube_polynomial_bruteforce(const LabeledGraph& g, const CubeOptions& options) {
  if (g.num_vertices() > options.vertex_budget) {
    throw BudgetError("cube enumeration vertex count", g.num_vertices(), options.vertex_budget);
  }
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) max_deg = std::max(max_deg, g.degree(v));
  if (max_deg > options.max_degree) throw BudgetError("cube enumeration maximum degree", max_deg, options.max_degree);

  const unsigned workers = detail::resolve_threads(options.threads);
  std::vector<std::vector<std::uint64_t>> partial(workers);
  detail::parallel_for(g.num_vertices(), workers, [&](std::size_t v, unsigned w) {
    CubeCounter(g, static_cast<Vertex>(v), partial[w]).run();
  });
  std::vector<BigInt> total;
  for (const auto& p : partial) {
    if (total.size() < p.size()) total.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) total[i] += p[i];
  }
  return IntPolynomial(std::move(total));
}

IntPolynomial cube_polynomial_recurrence(unsigned n, unsigned k) {
  const IntPolynomial step{BigInt(k), BigInt(k) - 1};
  const IntPolynomial onex{1, 1};
  IntPolynomial older = IntPolynomial::constant(1);
  if (n == 0) return older;
  IntPolynomial prev = step;
  for (unsigned m = 2; m <= n; ++m) {
    IntPolynomial next = step * prev + onex * older;
    older = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

IntPolynomial cube_polynomial_closed_form(unsigned n, unsigned k) {
  const IntPolynomial step{BigInt(k), BigInt(k) - 1};
  const IntPolynomial onex{1, 1};
  IntPolynomial sum;
  for (unsigned i = 0; 2 * i <= n; ++i) {
    BigInt binom = 1;
    for (unsigned j = 0; j < i; ++j) binom = binom * (n - i - j) / (j + 1);
    sum += binom * (step.pow(n - 2 * i) * onex.pow(i));
  }
  return sum;
}

PolyRationalGF cube_polynomial_gf(unsigned k) {
  return {{IntPolynomial::constant(1)},
          {IntPolynomial::constant(1), IntPolynomial{-BigInt(k), -(BigInt(k) - 1)}, IntPolynomial{-1, -1}}};
}

std::size_t degree_formula(std::span<const Letter> w, unsigned k) {
  if (!is_kpell(w, k)) throw DomainError("degree_formula needs a valid word: " + render_word(w));
  const std::size_t zeros = count_letter(w, 0), tops = count_letter(w, static_cast<Letter>(k));
  if (k == 2) {
    std::size_t ones = count_letter(w, 1), pairs = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) pairs += (w[i] == 1 && w[i + 1] == 1) ? 1 : 0;
    return zeros + ones + tops / 2 + pairs;
  }
  std::size_t middle = 0;
  for (Letter x : w) middle += (x >= 1 && x < k) ? 1 : 0;
  return zeros + 2 * middle + tops / 2 - runs_of(w, static_cast<Letter>(k - 1)).size();
}

DegreeCensus degree_census(const LabeledGraph& g) {
  DegreeCensus c;
  for (Vertex v = 0; v < g.num_vertices(); ++v) ++c.histogram[g.degree(v)];
  if (!c.histogram.empty()) {
    c.min_degree = c.histogram.begin()->first;
    c.max_degree = c.histogram.rbegin()->first;
  }
  return c;
}

BigInt delta_minus_one_formula(unsigned n, unsigned k) {
  const unsigned e = k - 2;
  BigInt sum = BigInt(n) * boost::multiprecision::pow(BigInt(n) - 1, e);
  for (unsigned l = 1; l <= n; ++l) sum += BigInt(n - l + 1) * boost::multiprecision::pow(BigInt(n - l), e);
  return sum;
}

BigInt delta_minus_one_swapped(unsigned n, unsigned k) {
  if (n == 0) return 0;
  const BigInt base = BigInt(k) - 2;
  BigInt sum = BigInt(n) * boost::multiprecision::pow(base, n - 1);
  for (unsigned l = 1; l <= n; ++l) sum += BigInt(n - l + 1) * boost::multiprecision::pow(base, n - l);
  return sum;
}

bool has_delta_minus_one_shape(std::span<const Letter> w, unsigned k) {
  const std::size_t zeros = count_letter(w, 0);
  const std::size_t below = count_letter(w, static_cast<Letter>(k - 1));
  const std::size_t tops = count_letter(w, static_cast<Letter>(k));
  if (tops != 0) return false;
  if (zeros == 1 && below == 0) return true;
  return zeros == 0 && runs_of(w, static_cast<Letter>(k - 1)).size() == 1;
}

DeltaMinusOneRecord count_degree_delta_minus_1(const LabeledGraph& g) {
  if (g.family() != Family::kPell || g.k() < 3 || g.length() < 1) {
    throw DomainError("the degree 2n-1 census needs a k-Pell graph with k >= 3 and n >= 1");
  }
  DeltaMinusOneRecord r;
  r.n = g.length();
  r.k = g.k();
  r.formula = delta_minus_one_formula(r.n, r.k);
  r.swapped = delta_minus_one_swapped(r.n, r.k);
  r.shape_matches = true;
  const std::size_t target = 2 * r.n - 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const bool hit = g.degree(v) == target;
    if (hit) ++r.census;
    if (hit != has_delta_minus_one_shape(g.word(v), r.k)) r.shape_matches = false;
  }
  return r;
}

}  // namespace kpell
