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

// Hamiltonian paths of Pi(n,k).
//
// The first k blocks of Pi(n,k) form the grid Pi(n-1,k) x P_k. Laying a
// Hamiltonian path H of Pi(n-1,k) along the x axis turns that product into
// an N x k rectangle whose columns are the copies yH[x]. The kk block is a
// copy of Pi(n-2,k) joined to the (k-1) row by the links (k-1)w ~ kkw. So
// given a path Q of Pi(n-2,k) starting at w, it suffices to cover the
// rectangle from corner (1, 0) to cell (j, k-1), where column j holds
// H[j-1] = (k-1)w, and then walk Q. Rectangles admit such a path whenever
// the two cells have the right colors; we keep a few (H, Q) pairs with
// different endpoints per level so that some pair always lines up.

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "kpell/error.hpp"
#include "kpell/graph.hpp"

namespace kpell {
namespace {

using Path = std::vector<std::uint32_t>;

constexpr std::size_t kPoolSize = 4;
constexpr std::uint64_t kFallbackNodes = 20'000'000;
// The fallback recurses once per path vertex.
constexpr std::size_t kFallbackMaxVertices = 5'000;

bool grid_compatible(std::uint64_t cols, unsigned k, std::uint64_t j) {
  if (k % 2 == 1) return cols % 2 == j % 2;
  return j % 2 == 1;
}

// Visits every cell (x, y), 1 <= x <= cols, 0 <= y < k, once, moving to a
// grid neighbor each step, from (1, 0) to (j, k-1). Needs grid_compatible.
void walk_grid(std::uint64_t cols, unsigned k, std::uint64_t j,
               const std::function<void(std::uint64_t, unsigned)>& emit) {
  auto column = [&](std::uint64_t x, unsigned from, bool up) {
    if (up) {
      for (unsigned y = from; y < k; ++y) emit(x, y);
    } else {
      for (unsigned y = k; y-- > from;) emit(x, y);
    }
  };
  if (j % 2 == 1) {
    for (std::uint64_t x = 1; x < j; ++x) column(x, 0, x % 2 == 1);
    for (std::uint64_t x = j; x <= cols; ++x) emit(x, 0);
    const std::uint64_t width = cols - j + 1;
    if (width % 2 == 1) {
      bool up = true;
      for (std::uint64_t x = cols; x >= j; --x, up = !up) column(x, 1, up);
    } else {
      for (unsigned r = 1; r < k; ++r) {
        if (r % 2 == 1) {
          for (std::uint64_t x = cols; x >= j; --x) emit(x, r);
        } else {
          for (std::uint64_t x = j; x <= cols; ++x) emit(x, r);
        }
      }
    }
  } else {
    for (std::uint64_t x = 1; x + 1 < j; ++x) column(x, 0, x % 2 == 1);
    for (std::uint64_t x = j - 1; x <= cols; ++x) emit(x, 0);
    bool up = true;
    for (std::uint64_t x = cols; x > j; --x, up = !up) column(x, 1, up);
    for (unsigned r = 1; r < k; ++r) {
      if (r % 2 == 1) {
        emit(j, r);
        emit(j - 1, r);
      } else {
        emit(j - 1, r);
        emit(j, r);
      }
    }
  }
}

// Paths are sequences of lexicographic ranks. `block` is |Pi(n-1,k)| and
// `sub` is |Pi(n-2,k)|.
std::optional<Path> splice(const Path& h, const std::vector<std::uint32_t>& pos_h, const Path& q,
                           unsigned k, std::uint64_t block, std::uint64_t sub) {
  const std::uint64_t target = (k - 1) * sub + q.front();
  const std::uint64_t j = pos_h[target] + 1;
  const std::uint64_t cols = h.size();
  if (!grid_compatible(cols, k, j)) return std::nullopt;
  Path out;
  out.reserve(cols * k + q.size());
  walk_grid(cols, k, j, [&](std::uint64_t x, unsigned y) {
    out.push_back(static_cast<std::uint32_t>(y * block + h[x - 1]));
  });
  for (auto r : q) out.push_back(static_cast<std::uint32_t>(k * block + r));
  return out;
}

std::vector<std::uint32_t> positions(const Path& p) {
  std::vector<std::uint32_t> pos(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i]] = static_cast<std::uint32_t>(i);
  return pos;
}

std::optional<Path> construct(unsigned n, unsigned k) {
  if (n == 0) return Path{0};
  std::vector<Path> older{Path{0}};
  std::vector<Path> prev(1);
  for (unsigned x = 0; x < k; ++x) prev[0].push_back(x);
  std::uint64_t sub = 1, block = k;  // |Pi(m-2,k)|, |Pi(m-1,k)| for m = 2
  for (unsigned m = 2; m <= n; ++m) {
    std::vector<Path> next;
    std::set<std::pair<std::uint32_t, std::uint32_t>> ends;
    for (const Path& base : prev) {
      Path rev(base.rbegin(), base.rend());
      for (const Path* h : std::array<const Path*, 2>{&base, &rev}) {
        auto pos = positions(*h);
        for (const Path& qb : older) {
          Path qr(qb.rbegin(), qb.rend());
          for (const Path* q : std::array<const Path*, 2>{&qb, &qr}) {
            if (next.size() >= kPoolSize) break;
            auto cand = splice(*h, pos, *q, k, block, sub);
            if (cand && ends.emplace(cand->front(), cand->back()).second) next.push_back(std::move(*cand));
          }
        }
      }
    }
    if (next.empty()) return std::nullopt;
    older = std::move(prev);
    prev = std::move(next);
    const std::uint64_t size = k * block + sub;
    sub = block;
    block = size;
  }
  return prev.front();
}

// Backtracking with a fewest-free-neighbors-first ordering.
std::optional<std::vector<Vertex>> backtrack_path(const LabeledGraph& g, std::uint64_t node_budget) {
  const std::size_t count = g.num_vertices();
  std::vector<bool> used(count, false);
  std::vector<Vertex> path;
  std::uint64_t nodes = 0;
  std::function<bool(Vertex)> dfs = [&](Vertex v) -> bool {
    if (++nodes > node_budget) return false;
    used[v] = true;
    path.push_back(v);
    if (path.size() == count) return true;
    std::vector<std::pair<std::size_t, Vertex>> order;
    for (Vertex u : g.neighbors(v)) {
      if (used[u]) continue;
      std::size_t free = 0;
      for (Vertex w : g.neighbors(u)) free += used[w] ? 0 : 1;
      order.emplace_back(free, u);
    }
    std::sort(order.begin(), order.end());
    for (auto [free, u] : order) {
      if (dfs(u)) return true;
      if (nodes > node_budget) break;
    }
    used[v] = false;
    path.pop_back();
    return false;
  };
  for (Vertex s = 0; s < count && nodes <= node_budget; ++s) {
    if (dfs(s)) return path;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Vertex> hamiltonian_path(const LabeledGraph& g) {
  if (g.family() != Family::kPell) throw DomainError("hamiltonian_path expects a k-Pell graph");
  std::optional<std::vector<Vertex>> path = construct(g.length(), g.k());
  if ((!path || !validate_path(g, *path)) && g.num_vertices() <= kFallbackMaxVertices) {
    path = backtrack_path(g, kFallbackNodes);
  }
  if (!path || !validate_path(g, *path)) {
    throw InternalError("no Hamiltonian path found for n=" + std::to_string(g.length()) +
                        " k=" + std::to_string(g.k()));
  }
  return *path;
}

CycleSearch search_hamiltonian_cycle(const LabeledGraph& g, std::uint64_t node_budget) {
  CycleSearch result;
  const std::size_t count = g.num_vertices();
  if (count < 3) {
    result.exhausted = true;
    return result;
  }
  std::vector<bool> used(count, false);
  std::vector<Vertex> path;
  bool out_of_budget = false;
  std::function<bool(Vertex)> dfs = [&](Vertex v) -> bool {
    if (++result.nodes > node_budget) {
      out_of_budget = true;
      return false;
    }
    used[v] = true;
    path.push_back(v);
    if (path.size() == count) {
      if (g.adjacent(v, path.front())) return true;
    } else {
      for (Vertex u : g.neighbors(v)) {
        if (!used[u] && dfs(u)) return true;
        if (out_of_budget) break;
      }
    }
    used[v] = false;
    path.pop_back();
    return false;
  };
  // A cycle through every vertex passes vertex 0, so starting there is enough.
  if (dfs(0)) result.cycle = path;
  result.exhausted = !out_of_budget;
  return result;
}

}  // namespace kpell
