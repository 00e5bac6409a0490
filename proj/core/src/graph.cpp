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

#include "kpell/graph.hpp"

#include <algorithm>

#include "kpell/error.hpp"

namespace kpell {

bool LabeledGraph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<Vertex> LabeledGraph::find(std::span<const Letter> w) const {
  if (w.size() != length_) return std::nullopt;
  const std::size_t n = length_;
  std::uint64_t rank = 0;
  if (family_ == Family::kPell) {
    if (!is_kpell(w, k_)) return std::nullopt;
    // Each token contributes (number of smaller tokens) * |words after it|.
    for (std::size_t p = 0; p < n;) {
      const std::uint64_t rest = counts_[n - p - 1];
      if (w[p] < k_) {
        rank += w[p] * rest;
        p += 1;
      } else {
        rank += k_ * rest;
        p += 2;
      }
    }
  } else {
    if (!is_fibonacci_string(w)) return std::nullopt;
    for (std::size_t p = 0; p < n;) {
      if (w[p] == 0) {
        p += 1;
      } else {
        rank += counts_[n - p - 1];
        p += 2;
      }
    }
  }
  return static_cast<Vertex>(rank);
}

std::vector<KPellWord> neighbors(const KPellWord& w) {
  const unsigned k = w.k();
  const Letter top = static_cast<Letter>(k), below = static_cast<Letter>(k - 1);
  std::vector<Letter> t(w.letters().begin(), w.letters().end());
  std::vector<KPellWord> out;
  auto try_push = [&]() {
    if (is_kpell(t, k)) out.emplace_back(t, k);
  };
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Letter x = t[i];
    if (x < top) {
      if (x >= 1) {
        t[i] = x - 1;
        try_push();
      }
      if (x + 1 < top) {
        t[i] = x + 1;
        try_push();
      }
      t[i] = x;
    }
    if (i + 1 < t.size()) {
      if (t[i] == below && t[i + 1] == below) {
        t[i] = t[i + 1] = top;
        try_push();
        t[i] = t[i + 1] = below;
      } else if (t[i] == top && t[i + 1] == top) {
        t[i] = t[i + 1] = below;
        try_push();
        t[i] = t[i + 1] = top;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph build_kpell_graph(unsigned n, unsigned k, std::uint64_t budget) {
  LabeledGraph g;
  g.family_ = Family::kPell;
  g.length_ = n;
  g.k_ = k;
  g.words_ = enumerate_kpell_flat(n, k, budget);
  g.counts_.resize(n + 1);
  for (unsigned r = 0; r <= n; ++r) g.counts_[r] = *to_u64(kpell_count(r, k));

  const auto& c = g.counts_;
  const std::size_t count = g.words_.size();
  g.offsets_.assign(count + 1, 0);
  std::vector<std::int64_t> nb;
  // Neighbor indices follow from the rank formula in find(): a move only
  // changes the contribution of the tokens it touches.
  for (std::size_t v = 0; v < count; ++v) {
    auto w = g.words_[v];
    nb.clear();
    const auto sv = static_cast<std::int64_t>(v);
    for (std::size_t p = 0; p < n;) {
      const std::int64_t rest = static_cast<std::int64_t>(c[n - p - 1]);
      if (w[p] < k) {
        if (w[p] >= 1) nb.push_back(sv - rest);
        if (w[p] + 1u < k) nb.push_back(sv + rest);
        if (w[p] == k - 1 && p + 1 < n && w[p + 1] == k - 1) {
          nb.push_back(sv + rest - static_cast<std::int64_t>(k - 1) * static_cast<std::int64_t>(c[n - p - 2]));
        }
        p += 1;
      } else {
        // Aligned kk token; turning it into (k-1)(k-1) keeps the runs even.
        nb.push_back(sv - rest + static_cast<std::int64_t>(k - 1) * static_cast<std::int64_t>(c[n - p - 2]));
        p += 2;
      }
    }
    std::sort(nb.begin(), nb.end());
    for (auto u : nb) g.adjacency_.push_back(static_cast<Vertex>(u));
    g.offsets_[v + 1] = g.adjacency_.size();
  }
  return g;
}

LabeledGraph build_fib_cube(unsigned m, std::uint64_t budget) {
  LabeledGraph g;
  g.family_ = Family::kFibonacci;
  g.length_ = m;
  g.k_ = 0;
  g.words_ = enumerate_fib_flat(m, budget);
  g.counts_.resize(m + 1);
  for (unsigned r = 0; r <= m; ++r) g.counts_[r] = *to_u64(fib_count(r));

  const auto& c = g.counts_;
  const std::size_t count = g.words_.size();
  g.offsets_.assign(count + 1, 0);
  std::vector<std::int64_t> nb;
  for (std::size_t v = 0; v < count; ++v) {
    auto w = g.words_[v];
    nb.clear();
    const auto sv = static_cast<std::int64_t>(v);
    for (std::size_t p = 0; p < m; ++p) {
      const std::int64_t rest = static_cast<std::int64_t>(c[m - p - 1]);
      if (w[p] == 1) {
        nb.push_back(sv - rest);
      } else if ((p == 0 || w[p - 1] == 0) && (p + 1 == m || w[p + 1] == 0)) {
        nb.push_back(sv + rest);
      }
    }
    std::sort(nb.begin(), nb.end());
    for (auto u : nb) g.adjacency_.push_back(static_cast<Vertex>(u));
    g.offsets_[v + 1] = g.adjacency_.size();
  }
  return g;
}

Decomposition decompose(const LabeledGraph& g) {
  if (g.family() != Family::kPell) throw DomainError("decompose expects a k-Pell graph");
  if (g.length() < 2) throw DomainError("decompose needs n >= 2");
  const unsigned k = g.k();
  const std::uint64_t block = *to_u64(kpell_count(g.length() - 1, k));
  auto block_of = [&](Vertex v) { return static_cast<std::size_t>(std::min<std::uint64_t>(v / block, k)); };
  Decomposition d;
  d.blocks.resize(k + 1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) d.blocks[block_of(v)].push_back(v);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (v < u && block_of(v) != block_of(u)) d.links.emplace_back(v, u);
    }
  }
  return d;
}

bool validate_path(const LabeledGraph& g, std::span<const Vertex> path) {
  if (path.size() != g.num_vertices()) return false;
  std::vector<bool> seen(g.num_vertices(), false);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.num_vertices() || seen[path[i]]) return false;
    seen[path[i]] = true;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

}  // namespace kpell
