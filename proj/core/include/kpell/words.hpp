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

#ifndef KPELL_WORDS_HPP_
#define KPELL_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpell/bigint.hpp"

namespace kpell {

using Letter = std::uint8_t;

inline constexpr std::uint64_t kDefaultVertexBudget = 2'000'000;
// Largest k accepted anywhere; keeps letters inside one byte.
inline constexpr unsigned kMaxK = 200;

// True iff every letter is <= k and every maximal run of k has even length.
bool is_kpell(std::span<const Letter> letters, unsigned k);
// True iff every letter is 0 or 1 and no two 1s are adjacent.
bool is_fibonacci_string(std::span<const Letter> bits);

// Digits, with letters >= 10 in parentheses: "0(10)(10)3".
std::string render_word(std::span<const Letter> letters);
// Inverse of render_word. Throws DomainError on malformed text.
std::vector<Letter> parse_letters(std::string_view text);

// A validated k-Pell word. Letters are stored raw, k included; the
// digraph kk is implied by the even-run invariant.
class KPellWord {
 public:
  KPellWord(std::vector<Letter> letters, unsigned k);
  static KPellWord parse(std::string_view text, unsigned k);

  unsigned k() const { return k_; }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  std::string str() const { return render_word(letters_); }

  friend bool operator==(const KPellWord&, const KPellWord&) = default;
  friend auto operator<=>(const KPellWord& a, const KPellWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  unsigned k_;
};

// A validated Fibonacci string.
class FibWord {
 public:
  explicit FibWord(std::vector<Letter> bits);
  static FibWord parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  Letter operator[](std::size_t i) const { return bits_[i]; }
  std::span<const Letter> bits() const { return bits_; }
  std::string str() const { return render_word(bits_); }

  friend bool operator==(const FibWord&, const FibWord&) = default;
  friend auto operator<=>(const FibWord& a, const FibWord& b) { return a.bits_ <=> b.bits_; }

 private:
  std::vector<Letter> bits_;
};

// Fixed-length words packed back to back. Used for vertex sets that can
// hold millions of entries.
class WordList {
 public:
  WordList() = default;
  explicit WordList(std::size_t length) : length_(length) {}

  std::size_t length() const { return length_; }
  std::size_t size() const { return count_; }
  std::span<const Letter> operator[](std::size_t i) const {
    return {data_.data() + i * length_, length_};
  }
  void reserve(std::size_t count) { data_.reserve(count * length_); }
  void push_back(std::span<const Letter> w);

 private:
  std::size_t length_ = 0;
  std::size_t count_ = 0;
  std::vector<Letter> data_;
};

// |Pi(n,k)| = F(n+1,k) and |Gamma(m)| = F(m+2), as exact integers.
BigInt kpell_count(unsigned n, unsigned k);
BigInt fib_count(unsigned m);

// Lexicographic enumeration. Throws BudgetError when the cardinality
// exceeds `budget`, before allocating anything.
WordList enumerate_kpell_flat(unsigned n, unsigned k, std::uint64_t budget = kDefaultVertexBudget);
std::vector<KPellWord> enumerate_kpell(unsigned n, unsigned k,
                                       std::uint64_t budget = kDefaultVertexBudget);
WordList enumerate_fib_flat(unsigned m, std::uint64_t budget = kDefaultVertexBudget);
std::vector<FibWord> enumerate_fib(unsigned m, std::uint64_t budget = kDefaultVertexBudget);

std::size_t count_letter(std::span<const Letter> w, Letter i);
inline std::size_t count_letter(const KPellWord& w, Letter i) { return count_letter(w.letters(), i); }
// Lengths of the maximal runs of letter i, left to right.
std::vector<std::size_t> runs_of(std::span<const Letter> w, Letter i);
inline std::vector<std::size_t> runs_of(const KPellWord& w, Letter i) { return runs_of(w.letters(), i); }

// Center families. Theta needs k even; Phi needs k odd and even length;
// Psi needs k odd and odd length. Parity mismatches throw DomainError.
// With a = (k-1)/2 and b = (k+1)/2:
//   Theta: letters k/2 and k/2-1, no two adjacent k/2-1.
//   Phi:   concatenation of the pairs aa, ab, ba with no ab after a ba.
//   Psi:   letters a and b, starts and ends with a, no bb, odd a-runs.
bool in_theta(const KPellWord& w);
bool in_phi(const KPellWord& w);
bool in_psi(const KPellWord& w);

// The family matching the parities of n and k, sorted lexicographically.
// Requires n >= 2.
std::vector<KPellWord> enumerate_center_family(unsigned n, unsigned k);
BigInt center_family_size(unsigned n, unsigned k);

}  // namespace kpell

#endif  // KPELL_WORDS_HPP_
