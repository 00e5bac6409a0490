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

#ifndef KPELL_SEQS_HPP_
#define KPELL_SEQS_HPP_

#include <cstddef>
#include <vector>

#include "kpell/bigint.hpp"
#include "kpell/polynomial.hpp"

namespace kpell {

// F(n,k) = k F(n-1,k) + F(n-2,k), F(0,k) = 0, F(1,k) = 1.
BigInt k_fibonacci(unsigned n, unsigned k);
// F(0..count-1, k) in one pass.
std::vector<BigInt> k_fibonacci_prefix(std::size_t count, unsigned k);

BigInt fibonacci(unsigned n);
BigInt pell(unsigned n);

// numerator(t) / denominator(t) with integer coefficients.
struct RationalGF {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

// Same shape, but every coefficient of t is itself a polynomial in x.
struct PolyRationalGF {
  std::vector<IntPolynomial> numerator;
  std::vector<IntPolynomial> denominator;
};

// First `count` Taylor coefficients at t = 0. Throws DomainError if the
// denominator's constant term is zero or a coefficient is not an integer.
std::vector<BigInt> gf_coefficients(const RationalGF& gf, std::size_t count);
// The constant term of the denominator must be a nonzero integer constant.
std::vector<IntPolynomial> gf_coefficients(const PolyRationalGF& gf, std::size_t count);

// t / (1 - k t - t^2)
RationalGF k_fibonacci_gf(unsigned k);
// (k - 1 + t) t / (1 - k t - t^2)^2
RationalGF edge_count_gf(unsigned k);

}  // namespace kpell

#endif  // KPELL_SEQS_HPP_
