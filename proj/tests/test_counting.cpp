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


#include <gtest/gtest.h>

#include "kpell/counting.hpp"
#include "kpell/error.hpp"
#include "kpell/seqs.hpp"
#include "oracles.hpp"

namespace kpell {
namespace {

IntPolynomial from_ints(const std::vector<std::int64_t>& c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return IntPolynomial(b);
}

TEST(Counting, EdgeCountFourWays) {
  for (unsigned k = 2; k <= 6; ++k) {
    auto gf = gf_coefficients(edge_count_gf(k), 12);
    for (unsigned n = 0; n < 12; ++n) {
      const BigInt rec = edge_count_recurrence(n, k);
      EXPECT_EQ(rec, edge_count_sum_formula(n, k)) << n << "," << k;
      EXPECT_EQ(rec, gf[n]) << n << "," << k;
      if (kpell_count(n, k) <= 50'000) EXPECT_EQ(rec, build_kpell_graph(n, k).num_edges()) << n << "," << k;
    }
  }
  EXPECT_EQ(edge_count_recurrence(2, 2), 5);
  EXPECT_EQ(edge_count_recurrence(2, 3), 13);
}

TEST(Counting, EdgeCountMatchesPairwiseOracle) {
  for (unsigned k = 2; k <= 4; ++k) {
    for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(edge_count_recurrence(n, k), oracle::kpell_graph(n, k).edges);
  }
}

TEST(Counting, DisplayedCubePolynomials) {
  for (std::int64_t k = 2; k <= 5; ++k) {
    for (unsigned n = 0; n <= 4; ++n) {
      const IntPolynomial want = from_ints(oracle::displayed_cube_polynomial(n, k));
      EXPECT_EQ(cube_polynomial_recurrence(n, k), want) << n << "," << k;
      EXPECT_EQ(cube_polynomial_closed_form(n, k), want) << n << "," << k;
      EXPECT_EQ(cube_polynomial_bruteforce(build_kpell_graph(n, k)), want) << n << "," << k;
    }
  }
}

TEST(Counting, CubePolynomialRoutesAgree) {
  for (unsigned k = 2; k <= 6; ++k) {
    auto gf = gf_coefficients(cube_polynomial_gf(k), 13);
    for (unsigned n = 0; n <= 12; ++n) {
      const IntPolynomial rec = cube_polynomial_recurrence(n, k);
      EXPECT_EQ(rec, cube_polynomial_closed_form(n, k)) << n << "," << k;
      EXPECT_EQ(rec, gf[n]) << n << "," << k;
      EXPECT_EQ(rec.degree(), static_cast<int>(n));
      EXPECT_EQ(rec.coefficient(0), kpell_count(n, k));
      EXPECT_EQ(rec.coefficient(1), edge_count_recurrence(n, k));
      // Alternating sum over cubes is 1 in a median graph.
      EXPECT_EQ(rec(-1), 1) << n << "," << k;
      if (kpell_count(n, k) <= 3'000) {
        EXPECT_EQ(cube_polynomial_bruteforce(build_kpell_graph(n, k)), rec) << n << "," << k;
      }
    }
  }
  // Closed form is independent of the recurrence, so check it far out too.
  for (unsigned k : {2u, 7u}) {
    for (unsigned n : {20u, 35u}) EXPECT_EQ(cube_polynomial_closed_form(n, k), cube_polynomial_recurrence(n, k));
  }
}

TEST(Counting, SquaresAgreeWithNaiveCount) {
  for (unsigned k = 2; k <= 4; ++k) {
    for (unsigned n = 0; n <= 5; ++n) {
      EXPECT_EQ(cube_polynomial_recurrence(n, k).coefficient(2), oracle::induced_squares(oracle::kpell_graph(n, k)))
          << n << "," << k;
    }
  }
}

TEST(Counting, FibonacciCubeCubePolynomial) {
  // Gamma(3) is a square with a pendant vertex.
  EXPECT_EQ(cube_polynomial_bruteforce(build_fib_cube(3)), (IntPolynomial{5, 5, 1}));
}

TEST(Counting, BruteForceBudgets) {
  auto g = build_kpell_graph(8, 3);
  EXPECT_THROW(cube_polynomial_bruteforce(g), BudgetError);
  CubeOptions o;
  o.vertex_budget = 10'000;
  o.max_degree = 3;
  EXPECT_THROW(cube_polynomial_bruteforce(g, o), BudgetError);
}

TEST(Counting, DegreeFormulaExamples) {
  auto d = [](const char* w, unsigned k) { return degree_formula(KPellWord::parse(w, k)); };
  EXPECT_EQ(d("22", 3), 3u);
  EXPECT_EQ(d("33", 3), 1u);
  EXPECT_EQ(d("1111", 3), 8u);
  EXPECT_EQ(d("111", 2), 5u);
  EXPECT_EQ(d("1111", 2), 7u);
  EXPECT_EQ(d("22", 2), 1u);
  EXPECT_EQ(d("", 4), 0u);
}

TEST(Counting, DegreeFormulaEqualsOracleDegree) {
  for (unsigned k = 2; k <= 5; ++k) {
    for (unsigned n = 0; n <= (k <= 3 ? 6u : 4u); ++n) {
      auto o = oracle::kpell_graph(n, k);
      for (std::size_t v = 0; v < o.words.size(); ++v) {
        EXPECT_EQ(degree_formula(o.words[v], k), o.adj[v].size()) << oracle::show(o.words[v]) << " k=" << k;
      }
    }
  }
}

TEST(Counting, DegreeCensus) {
  auto c = degree_census(build_kpell_graph(2, 3));
  EXPECT_EQ(c.histogram, (std::map<std::size_t, std::uint64_t>{{1, 1}, {2, 3}, {3, 5}, {4, 1}}));
  EXPECT_EQ(c.min_degree, 1u);
  EXPECT_EQ(c.max_degree, 4u);
  auto path = degree_census(build_kpell_graph(1, 5));
  EXPECT_EQ(path.histogram, (std::map<std::size_t, std::uint64_t>{{1, 2}, {2, 3}}));
  EXPECT_EQ(degree_census(build_kpell_graph(4, 3)).max_degree, 8u);
  for (unsigned k = 2; k <= 6; ++k) {
    for (unsigned n = 1; n <= 7; ++n) {
      auto g = build_kpell_graph(n, k);
      auto census = degree_census(g);
      std::uint64_t total = 0, sum = 0;
      for (auto [deg, cnt] : census.histogram) {
        total += cnt;
        sum += deg * cnt;
      }
      EXPECT_EQ(total, g.num_vertices());
      EXPECT_EQ(sum, 2 * g.num_edges());
      EXPECT_EQ(census.max_degree, k == 2 ? 2 * n - 1 : 2 * n) << n << "," << k;
      EXPECT_EQ(census.min_degree, (n + 1) / 2) << n << "," << k;
    }
  }
}

TEST(Counting, DeltaMinusOneDiscrepancyIsReported) {
  auto r = count_degree_delta_minus_1(build_kpell_graph(2, 3));
  EXPECT_EQ(r.formula, 4);
  EXPECT_EQ(r.census, 5u);
  EXPECT_FALSE(r.formula_matches());
  EXPECT_TRUE(r.shape_matches);
  EXPECT_EQ(delta_minus_one_formula(2, 3), 4);
  EXPECT_THROW(count_degree_delta_minus_1(build_kpell_graph(3, 2)), DomainError);
  EXPECT_THROW(count_degree_delta_minus_1(build_kpell_graph(0, 3)), DomainError);
}

TEST(Counting, DeltaMinusOneShapeAndSwappedFormula) {
  for (unsigned k = 3; k <= 5; ++k) {
    for (unsigned n = 1; n <= 7; ++n) {
      auto r = count_degree_delta_minus_1(build_kpell_graph(n, k));
      EXPECT_TRUE(r.shape_matches) << n << "," << k;
      EXPECT_EQ(r.swapped, r.census) << n << "," << k;
    }
  }
  EXPECT_TRUE(has_delta_minus_one_shape(parse_letters("011"), 3));
  EXPECT_FALSE(has_delta_minus_one_shape(parse_letters("0012"), 3));
  EXPECT_TRUE(has_delta_minus_one_shape(parse_letters("1221"), 3));
  EXPECT_FALSE(has_delta_minus_one_shape(parse_letters("1331"), 3));
}

}  // namespace
}  // namespace kpell
