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


// Deliberately naive reference implementations used only by the tests.
// Nothing here shares code with the library beyond the Letter type.

#ifndef KPELL_TESTS_ORACLES_HPP_
#define KPELL_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "kpell/words.hpp"

namespace kpell::oracle {

using Word = std::vector<Letter>;

inline std::string show(const Word& w) { return render_word(w); }

// Every maximal run of k has even length.
inline bool kpell_word(const Word& w, unsigned k) {
  std::size_t run = 0;
  for (Letter c : w) {
    if (c > k) return false;
    if (c == k) {
      ++run;
    } else {
      if (run % 2) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

inline bool fib_word(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 1) return false;
    if (i > 0 && w[i] && w[i - 1]) return false;
  }
  return true;
}

// All of {0..alphabet-1}^n in lexicographic order.
inline std::vector<Word> all_words(unsigned n, unsigned alphabet) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] + 1u == alphabet) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

inline std::vector<Word> kpell_words(unsigned n, unsigned k) {
  std::vector<Word> out;
  for (auto& w : all_words(n, k + 1)) {
    if (kpell_word(w, k)) out.push_back(w);
  }
  return out;
}

inline std::vector<Word> fib_words(unsigned m) {
  std::vector<Word> out;
  for (auto& w : all_words(m, 2)) {
    if (fib_word(w)) out.push_back(w);
  }
  return out;
}

// Edge test straight from the definition: one letter moves by one inside
// {0..k-1}, or a factor (k-1)(k-1) becomes kk.
inline bool kpell_adjacent(const Word& a, const Word& b, unsigned k) {
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) diff.push_back(i);
  }
  if (diff.size() == 1) {
    const int x = a[diff[0]], y = b[diff[0]];
    return x < static_cast<int>(k) && y < static_cast<int>(k) && (x - y == 1 || y - x == 1);
  }
  if (diff.size() == 2 && diff[1] == diff[0] + 1) {
    const Letter lo = static_cast<Letter>(k - 1), hi = static_cast<Letter>(k);
    auto pair_is = [&](const Word& w, Letter c) { return w[diff[0]] == c && w[diff[1]] == c; };
    return (pair_is(a, lo) && pair_is(b, hi)) || (pair_is(a, hi) && pair_is(b, lo));
  }
  return false;
}

inline bool fib_adjacent(const Word& a, const Word& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d == 1;
}

struct Graph {
  std::vector<Word> words;
  std::vector<std::vector<std::size_t>> adj;
  std::uint64_t edges = 0;
};

// O(|V|^2) pairwise construction.
inline Graph kpell_graph(unsigned n, unsigned k) {
  Graph g;
  g.words = kpell_words(n, k);
  g.adj.resize(g.words.size());
  for (std::size_t i = 0; i < g.words.size(); ++i) {
    for (std::size_t j = i + 1; j < g.words.size(); ++j) {
      if (kpell_adjacent(g.words[i], g.words[j], k)) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
        ++g.edges;
      }
    }
  }
  return g;
}

inline Graph fib_graph(unsigned m) {
  Graph g;
  g.words = fib_words(m);
  g.adj.resize(g.words.size());
  for (std::size_t i = 0; i < g.words.size(); ++i) {
    for (std::size_t j = i + 1; j < g.words.size(); ++j) {
      if (fib_adjacent(g.words[i], g.words[j])) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
        ++g.edges;
      }
    }
  }
  return g;
}

inline std::vector<int> bfs(const Graph& g, std::size_t s) {
  std::vector<int> d(g.words.size(), -1);
  std::deque<std::size_t> q{s};
  d[s] = 0;
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    for (auto u : g.adj[v]) {
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        q.push_back(u);
      }
    }
  }
  return d;
}

inline std::vector<std::vector<int>> all_distances(const Graph& g) {
  std::vector<std::vector<int>> d;
  for (std::size_t s = 0; s < g.words.size(); ++s) d.push_back(bfs(g, s));
  return d;
}

inline std::vector<int> eccentricities(const Graph& g) {
  std::vector<int> e;
  for (std::size_t s = 0; s < g.words.size(); ++s) {
    int m = 0;
    for (int x : bfs(g, s)) m = std::max(m, x);
    e.push_back(m);
  }
  return e;
}

// Induced 4-cycles, each counted once.
inline std::uint64_t induced_squares(const Graph& g) {
  const std::size_t n = g.words.size();
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    for (auto u : g.adj[v]) a[v][u] = 1;
  }
  std::uint64_t count = 0;
  // Opposite pairs (v, w) with v < w and no edge; two common neighbors
  // x < y that are not adjacent form one square. Each square has two
  // diagonals, so it is seen twice.
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = v + 1; w < n; ++w) {
      if (a[v][w]) continue;
      std::vector<std::size_t> common;
      for (auto x : g.adj[v]) {
        if (a[w][x]) common.push_back(x);
      }
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) count += !a[common[i]][common[j]];
      }
    }
  }
  return count / 2;
}

inline std::uint64_t kfib(unsigned n, unsigned k) {
  std::uint64_t a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t c = k * b + a;
    a = b;
    b = c;
  }
  return a;
}

// The first five cube polynomials written out as polynomials in k.
inline std::vector<std::int64_t> displayed_cube_polynomial(unsigned n, std::int64_t k) {
  const std::int64_t k2 = k * k, k3 = k2 * k, k4 = k3 * k;
  switch (n) {
    case 0:
      return {1};
    case 1:
      return {k, k - 1};
    case 2:
      return {k2 + 1, 2 * k2 - 2 * k + 1, k2 - 2 * k + 1};
    case 3:
      return {k3 + 2 * k, 3 * k3 - 3 * k2 + 4 * k - 2, 3 * k3 - 6 * k2 + 5 * k - 2, k3 - 3 * k2 + 3 * k - 1};
    case 4:
      return {k4 + 3 * k2 + 1, 4 * k4 - 4 * k3 + 9 * k2 - 6 * k + 2, 6 * k4 + 15 * k2 - 12 * k3 - 12 * k + 4,
              4 * k4 - 12 * k3 + 15 * k2 - 10 * k + 3, k4 - 4 * k3 + 6 * k2 - 4 * k + 1};
    default:
      return {};
  }
}

// Center sizes for n = 1..10; 0 marks a blank cell.
inline const std::map<unsigned, std::vector<unsigned>>& center_table() {
  static const std::map<unsigned, std::vector<unsigned>> table{
      {2, {2, 3, 5, 8, 13, 21, 34, 55, 89, 144}}, {3, {1, 3, 2, 8, 4, 20, 8, 48, 16, 112}},
      {4, {2, 3, 5, 8, 13, 0, 0, 0, 0, 0}},       {5, {1, 3, 2, 8, 4, 0, 0, 0, 0, 0}},
      {6, {2, 3, 5, 8, 13, 0, 0, 0, 0, 0}},       {7, {1, 3, 2, 8, 4, 0, 0, 0, 0, 0}},
      {8, {2, 3, 5, 8, 13, 0, 0, 0, 0, 0}},       {9, {1, 3, 2, 8, 4, 0, 0, 0, 0, 0}},
  };
  return table;
}

}  // namespace kpell::oracle

#endif  // KPELL_TESTS_ORACLES_HPP_
