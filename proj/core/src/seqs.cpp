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

#include "kpell/seqs.hpp"

#include <algorithm>

#include "kpell/error.hpp"

namespace kpell {

std::vector<BigInt> k_fibonacci_prefix(std::size_t count, unsigned k) {
  std::vector<BigInt> f(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i == 0) f[i] = 0;
    else if (i == 1) f[i] = 1;
    else f[i] = k * f[i - 1] + f[i - 2];
  }
  return f;
}

BigInt k_fibonacci(unsigned n, unsigned k) {
  BigInt prev = 0, cur = 1;
  if (n == 0) return prev;
  for (unsigned i = 1; i < n; ++i) {
    BigInt next = k * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt fibonacci(unsigned n) { return k_fibonacci(n, 1); }
BigInt pell(unsigned n) { return k_fibonacci(n, 2); }

std::vector<BigInt> gf_coefficients(const RationalGF& gf, std::size_t count) {
  const auto& den = gf.denominator.coefficients();
  if (den.empty() || den[0] == 0) throw DomainError("generating function denominator has zero constant term");
  const BigInt& d0 = den[0];
  std::vector<BigInt> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    BigInt acc = gf.numerator.coefficient(n);
    for (std::size_t i = 1; i < den.size() && i <= n; ++i) acc -= den[i] * out[n - i];
    if (acc % d0 != 0) throw DomainError("non-integral coefficient at t^" + std::to_string(n));
    out[n] = acc / d0;
  }
  return out;
}

std::vector<IntPolynomial> gf_coefficients(const PolyRationalGF& gf, std::size_t count) {
  const auto& den = gf.denominator;
  if (den.empty() || den[0].is_zero()) throw DomainError("generating function denominator has zero constant term");
  if (den[0].degree() != 0) throw DomainError("denominator constant term must be an integer constant");
  const BigInt d0 = den[0].coefficient(0);
  std::vector<IntPolynomial> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    IntPolynomial acc = n < gf.numerator.size() ? gf.numerator[n] : IntPolynomial();
    for (std::size_t i = 1; i < den.size() && i <= n; ++i) acc -= den[i] * out[n - i];
    std::vector<BigInt> c = acc.coefficients();
    for (auto& a : c) {
      if (a % d0 != 0) throw DomainError("non-integral coefficient at t^" + std::to_string(n));
      a /= d0;
    }
    out[n] = IntPolynomial(std::move(c));
  }
  return out;
}

RationalGF k_fibonacci_gf(unsigned k) {
  return {IntPolynomial{0, 1}, IntPolynomial{1, -BigInt(k), -1}};
}

RationalGF edge_count_gf(unsigned k) {
  IntPolynomial base{1, -BigInt(k), -1};
  return {IntPolynomial{0, BigInt(k) - 1, 1}, base * base};
}

}  // namespace kpell
