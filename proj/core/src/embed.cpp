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

#include "kpell/embed.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "kpell/error.hpp"
#include "parallel.hpp"

namespace kpell {

unsigned embedding_dimension(unsigned n, unsigned k) {
  if (n == 0) throw DomainError("the embedding needs n >= 1");
  return (2 * k - 2) * n - 1;
}

std::vector<Letter> phi_letters(std::span<const Letter> w, unsigned k) {
  if (!is_kpell(w, k)) throw DomainError("phi needs a valid word: " + render_word(w));
  if (w.empty()) throw DomainError("the embedding needs n >= 1");
  std::vector<Letter> out;
  out.reserve((2 * k - 2) * w.size());
  for (std::size_t p = 0; p < w.size();) {
    if (w[p] < k) {
      for (unsigned r = 0; r < k - 1 - w[p]; ++r) {
        out.push_back(1);
        out.push_back(0);
      }
      out.insert(out.end(), 2 * w[p], 0);
      p += 1;
    } else {
      out.push_back(0);
      out.push_back(1);
      out.insert(out.end(), 4 * k - 6, 0);
      p += 2;
    }
  }
  out.pop_back();
  return out;
}

FibWord phi(const KPellWord& w) { return FibWord(phi_letters(w.letters(), w.k())); }

EmbeddingCertificate verify_embedding(const LabeledGraph& g, unsigned threads, unsigned materialize_limit) {
  if (g.family() != Family::kPell) throw DomainError("verify_embedding expects a k-Pell graph");
  EmbeddingCertificate cert;
  cert.n = g.length();
  cert.k = g.k();
  cert.target_dim = embedding_dimension(cert.n, cert.k);
  const std::size_t dim = cert.target_dim;
  const std::size_t count = g.num_vertices();
  const unsigned workers = detail::resolve_threads(threads);

  std::vector<Letter> images(count * dim);
  std::vector<char> valid(count, 1);
  detail::parallel_for(count, workers, [&](std::size_t v, unsigned) {
    auto img = phi_letters(g.word(static_cast<Vertex>(v)), cert.k);
    valid[v] = img.size() == dim && is_fibonacci_string(img);
    if (img.size() == dim) std::copy(img.begin(), img.end(), images.begin() + static_cast<std::ptrdiff_t>(v * dim));
  });
  auto image = [&](std::size_t v) { return std::span<const Letter>(images.data() + v * dim, dim); };
  for (std::size_t v = 0; v < count; ++v) {
    if (!valid[v]) {
      cert.images_valid = false;
      cert.failure = "image of " + g.label(static_cast<Vertex>(v)) + " is not a Fibonacci string of length " +
                     std::to_string(dim);
      return cert;
    }
  }

  std::vector<Vertex> order(count);
  std::iota(order.begin(), order.end(), Vertex{0});
  auto less = [&](Vertex a, Vertex b) {
    auto x = image(a), y = image(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 1; i < count; ++i) {
    if (!less(order[i - 1], order[i])) {
      cert.injective = false;
      cert.failure = "vertices " + g.label(order[i - 1]) + " and " + g.label(order[i]) + " share an image";
      return cert;
    }
  }

  std::optional<LabeledGraph> cube;
  if (dim <= materialize_limit) {
    cube = build_fib_cube(static_cast<unsigned>(dim));
    cert.target_materialized = true;
  }
  std::vector<Vertex> bad(count, Vertex(-1));
  std::vector<std::uint64_t> edges(count, 0);
  detail::parallel_for(count, workers, [&](std::size_t v, unsigned) {
    std::optional<Vertex> iv = cube ? cube->find(image(v)) : std::nullopt;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
      if (u < v) continue;
      ++edges[v];
      bool ok;
      if (cube) {
        auto iu = cube->find(image(u));
        ok = iv && iu && cube->adjacent(*iv, *iu);
      } else {
        std::size_t diff = 0;
        auto a = image(v), b = image(u);
        for (std::size_t i = 0; i < dim; ++i) diff += a[i] != b[i];
        ok = diff == 1;
      }
      if (!ok) {
        bad[v] = u;
        break;
      }
    }
  });
  for (std::size_t v = 0; v < count; ++v) {
    cert.checked_edges += edges[v];
    if (bad[v] != Vertex(-1) && cert.edges_preserved) {
      cert.edges_preserved = false;
      cert.failure = "edge " + g.label(static_cast<Vertex>(v)) + " - " + g.label(bad[v]) + " is not mapped to an edge";
    }
  }
  return cert;
}

EmbedDimSearch search_min_embedding_dimension(const LabeledGraph& g, unsigned max_m, std::uint64_t node_budget) {
  EmbedDimSearch result;
  const std::size_t count = g.num_vertices();
  // Breadth-first order so every vertex after the first has a placed neighbor.
  std::vector<Vertex> order{0};
  std::vector<bool> queued(count, false);
  queued[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex u : g.neighbors(order[head])) {
      if (!queued[u]) {
        queued[u] = true;
        order.push_back(u);
      }
    }
  }
  if (order.size() != count) throw DomainError("embedding search needs a connected graph");

  for (unsigned m = 0; m <= max_m; ++m) {
    if (fib_count(m) < count) continue;
    const LabeledGraph cube = build_fib_cube(m);
    const Vertex none = Vertex(-1);
    std::vector<Vertex> place(count, none);
    std::vector<bool> used(cube.num_vertices(), false);
    bool out_of_budget = false;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
      if (i == count) return true;
      if (++result.nodes > node_budget) {
        out_of_budget = true;
        return false;
      }
      const Vertex v = order[i];
      std::vector<Vertex> candidates;
      if (i == 0) {
        candidates.resize(cube.num_vertices());
        std::iota(candidates.begin(), candidates.end(), Vertex{0});
      } else {
        for (Vertex u : g.neighbors(v)) {
          if (place[u] != none) {
            auto nb = cube.neighbors(place[u]);
            candidates.assign(nb.begin(), nb.end());
            break;
          }
        }
      }
      for (Vertex c : candidates) {
        if (used[c]) continue;
        bool ok = true;
        for (Vertex u : g.neighbors(v)) {
          if (place[u] != none && !cube.adjacent(place[u], c)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        place[v] = c;
        used[c] = true;
        if (rec(i + 1)) return true;
        place[v] = none;
        used[c] = false;
        if (out_of_budget) return false;
      }
      return false;
    };
    if (rec(0)) {
      result.dimension = m;
      return result;
    }
    if (out_of_budget) {
      result.exhausted = false;
      return result;
    }
  }
  return result;
}

}  // namespace kpell
