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

#include "kpell/metrics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>

#include "kpell/error.hpp"
#include "parallel.hpp"

namespace kpell {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Fills dist with distances from s and returns the eccentricity of s.
std::uint32_t bfs_into(const LabeledGraph& g, Vertex s, std::vector<std::uint32_t>& dist,
                       std::vector<Vertex>& queue) {
  const std::size_t count = g.num_vertices();
  dist.assign(count, kUnreached);
  queue.resize(count);
  std::size_t head = 0, tail = 0;
  queue[tail++] = s;
  dist[s] = 0;
  while (head < tail) {
    const Vertex v = queue[head++];
    const std::uint32_t next = dist[v] + 1;
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] == kUnreached) {
        dist[u] = next;
        queue[tail++] = u;
      }
    }
  }
  if (tail != count) throw InternalError("graph is disconnected: BFS from " + g.label(s) + " reached " +
                                         std::to_string(tail) + " of " + std::to_string(count) + " vertices");
  return dist[queue[count - 1]];
}

void check_budget(const LabeledGraph& g, std::uint64_t budget, const char* what) {
  if (g.num_vertices() > budget) throw BudgetError(what, g.num_vertices(), budget);
}

void finish_profile(EccentricityProfile& p) {
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  for (Vertex v = 0; v < p.ecc.size(); ++v) {
    if (p.ecc[v] == p.radius) p.center.push_back(v);
    if (p.ecc[v] == p.diameter) p.periphery.push_back(v);
  }
}

// Index of the reversed word for every vertex, or empty if reversal is
// not an automorphism of g.
std::vector<Vertex> reversal_map(const LabeledGraph& g) {
  const std::size_t count = g.num_vertices();
  std::vector<Vertex> mirror(count);
  std::vector<Letter> buf;
  for (Vertex v = 0; v < count; ++v) {
    auto w = g.word(v);
    buf.assign(w.rbegin(), w.rend());
    auto r = g.find(buf);
    if (!r) return {};
    mirror[v] = *r;
  }
  for (Vertex v = 0; v < count; ++v) {
    if (g.degree(v) != g.degree(mirror[v])) return {};
    for (Vertex u : g.neighbors(v)) {
      if (!g.adjacent(mirror[v], mirror[u])) return {};
    }
  }
  return mirror;
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const LabeledGraph& g, Vertex source) {
  if (source >= g.num_vertices()) throw DomainError("source vertex out of range");
  std::vector<std::uint32_t> dist;
  std::vector<Vertex> queue;
  bfs_into(g, source, dist, queue);
  return dist;
}

EccentricityProfile eccentricity_profile_exhaustive(const LabeledGraph& g, unsigned threads, std::uint64_t budget) {
  check_budget(g, budget, "all-source BFS vertex count");
  const std::size_t count = g.num_vertices();
  const unsigned workers = detail::resolve_threads(threads);
  EccentricityProfile p;
  p.ecc.assign(count, 0);
  std::vector<std::vector<std::uint32_t>> dist(workers);
  std::vector<std::vector<Vertex>> queue(workers);
  detail::parallel_for(count, workers, [&](std::size_t s, unsigned w) {
    p.ecc[s] = bfs_into(g, static_cast<Vertex>(s), dist[w], queue[w]);
  });
  p.bfs_runs = count;
  finish_profile(p);
  return p;
}

EccentricityProfile eccentricity_profile(const LabeledGraph& g, unsigned threads, std::uint64_t budget) {
  check_budget(g, budget, "all-source BFS vertex count");
  const std::size_t count = g.num_vertices();
  const unsigned workers = detail::resolve_threads(threads);
  const std::vector<Vertex> mirror = reversal_map(g);

  EccentricityProfile p;
  p.ecc.assign(count, 0);
  std::vector<std::uint32_t> lo(count, 0), hi(count, kUnreached);
  std::vector<bool> done(count, false);
  std::vector<Vertex> active(count);
  for (Vertex v = 0; v < count; ++v) active[v] = v;

  // From d(s, .) and ecc(s): max(d, e - d) <= ecc(v) <= e + d.
  auto tighten = [&](Vertex s, std::uint32_t e, auto dist_of) {
    if (!done[s]) {
      p.ecc[s] = e;
      lo[s] = hi[s] = e;
      done[s] = true;
    }
    for (Vertex v : active) {
      if (done[v]) continue;
      const std::uint32_t d = dist_of(v);
      lo[v] = std::max({lo[v], d, e - d});
      hi[v] = std::min(hi[v], e + d);
      if (lo[v] == hi[v]) {
        p.ecc[v] = lo[v];
        done[v] = true;
      }
    }
  };

  std::vector<std::vector<std::uint32_t>> dist(workers);
  std::vector<std::vector<Vertex>> queue(workers);
  std::vector<std::uint32_t> ecc_of(workers);
  std::vector<Vertex> sources;
  bool pick_high = true;
  while (!active.empty()) {
    // Alternate between the largest upper bound and the smallest lower
    // bound; ties go to higher degree, then to the smaller index.
    sources.clear();
    for (unsigned b = 0; b < workers && sources.size() < active.size(); ++b, pick_high = !pick_high) {
      Vertex best = kUnreached;
      for (Vertex v : active) {
        if (std::find(sources.begin(), sources.end(), v) != sources.end()) continue;
        if (best == kUnreached) {
          best = v;
          continue;
        }
        bool better;
        if (pick_high) {
          better = hi[v] != hi[best] ? hi[v] > hi[best] : g.degree(v) > g.degree(best);
        } else {
          better = lo[v] != lo[best] ? lo[v] < lo[best] : g.degree(v) > g.degree(best);
        }
        if (better) best = v;
      }
      sources.push_back(best);
    }
    detail::parallel_for(sources.size(), workers, [&](std::size_t i, unsigned) {
      ecc_of[i] = bfs_into(g, sources[i], dist[i], queue[i]);
    });
    p.bfs_runs += sources.size();
    for (std::size_t i = 0; i < sources.size(); ++i) {
      const auto& d = dist[i];
      tighten(sources[i], ecc_of[i], [&](Vertex v) { return d[v]; });
      if (!mirror.empty()) {
        tighten(mirror[sources[i]], ecc_of[i], [&](Vertex v) { return d[mirror[v]]; });
      }
    }
    std::erase_if(active, [&](Vertex v) { return done[v]; });
  }
  finish_profile(p);
  return p;
}

std::uint32_t closed_form_radius(unsigned n, unsigned k) { return (k * n) / 2; }

std::uint32_t closed_form_diameter(unsigned n, unsigned k) { return n * k - (n + 1) / 2; }

std::vector<Vertex> predicted_center(const LabeledGraph& g) {
  if (g.family() != Family::kPell) throw DomainError("predicted_center expects a k-Pell graph");
  std::vector<Vertex> out;
  for (const auto& w : enumerate_center_family(g.length(), g.k())) {
    auto v = g.find(w.letters());
    if (!v) throw InternalError("center word " + w.str() + " is not a vertex");
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool center_induces_fibonacci_cube(const LabeledGraph& g, std::span<const Vertex> center) {
  if (g.family() != Family::kPell || g.k() % 2 != 0) throw DomainError("the Fibonacci cube check needs even k");
  const unsigned n = g.length();
  const Letter zero = static_cast<Letter>(g.k() / 2), one = static_cast<Letter>(g.k() / 2 - 1);
  const LabeledGraph cube = build_fib_cube(n);
  if (center.size() != cube.num_vertices()) return false;

  std::vector<Vertex> image(g.num_vertices(), kUnreached);
  std::vector<bool> hit(cube.num_vertices(), false);
  std::vector<Letter> bits(n);
  for (Vertex v : center) {
    auto w = g.word(v);
    for (unsigned i = 0; i < n; ++i) {
      if (w[i] == zero) bits[i] = 0;
      else if (w[i] == one) bits[i] = 1;
      else return false;
    }
    auto u = cube.find(bits);
    if (!u || hit[*u]) return false;
    hit[*u] = true;
    image[v] = *u;
  }
  std::uint64_t induced = 0;
  for (Vertex v : center) {
    for (Vertex u : g.neighbors(v)) {
      if (u <= v || image[u] == kUnreached) continue;
      if (!cube.adjacent(image[v], image[u])) return false;
      ++induced;
    }
  }
  return induced == cube.num_edges();
}

std::optional<Vertex> median(const LabeledGraph& g, Vertex x, Vertex y, Vertex z) {
  auto dx = bfs_distances(g, x), dy = bfs_distances(g, y), dz = bfs_distances(g, z);
  std::optional<Vertex> found;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (dx[u] + dy[u] == dx[y] && dx[u] + dz[u] == dx[z] && dy[u] + dz[u] == dy[z]) {
      if (found) return std::nullopt;
      found = u;
    }
  }
  return found;
}

MedianReport verify_median_graph(const LabeledGraph& g, const MedianOptions& options) {
  check_budget(g, options.matrix_budget, "distance matrix vertex count");
  const std::size_t count = g.num_vertices();
  const unsigned workers = detail::resolve_threads(options.threads);
  MedianReport report;
  report.seed = options.seed;

  std::vector<std::uint16_t> dm(count * count);
  {
    std::vector<std::vector<std::uint32_t>> dist(workers);
    std::vector<std::vector<Vertex>> queue(workers);
    detail::parallel_for(count, workers, [&](std::size_t s, unsigned w) {
      bfs_into(g, static_cast<Vertex>(s), dist[w], queue[w]);
      for (std::size_t t = 0; t < count; ++t) dm[s * count + t] = static_cast<std::uint16_t>(dist[w][t]);
    });
  }
  auto d = [&](std::size_t a, std::size_t b) { return dm[a * count + b]; };

  if (count < 3) {
    report.exhaustive = true;
    return report;
  }

  if (count <= options.exhaustive_limit) {
    report.exhaustive = true;
    // Interval I(a, b) as a bitset, for every pair.
    const std::size_t words = (count + 63) / 64;
    std::vector<std::uint64_t> interval(count * count * words, 0);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        std::uint64_t* bits = &interval[(a * count + b) * words];
        for (std::size_t u = 0; u < count; ++u) {
          if (d(a, u) + d(u, b) == d(a, b)) bits[u / 64] |= std::uint64_t{1} << (u % 64);
        }
      }
    }
    std::vector<std::optional<std::array<Vertex, 3>>> bad(count);
    detail::parallel_for(count, workers, [&](std::size_t x, unsigned) {
      for (std::size_t y = x + 1; y < count && !bad[x]; ++y) {
        const std::uint64_t* ixy = &interval[(x * count + y) * words];
        for (std::size_t z = y + 1; z < count; ++z) {
          const std::uint64_t* ixz = &interval[(x * count + z) * words];
          const std::uint64_t* iyz = &interval[(y * count + z) * words];
          int total = 0;
          for (std::size_t i = 0; i < words && total < 2; ++i) total += std::popcount(ixy[i] & ixz[i] & iyz[i]);
          if (total != 1) {
            bad[x] = std::array<Vertex, 3>{static_cast<Vertex>(x), static_cast<Vertex>(y), static_cast<Vertex>(z)};
            break;
          }
        }
      }
    });
    report.checked = static_cast<std::uint64_t>(count) * (count - 1) * (count - 2) / 6;
    for (const auto& b : bad) {
      if (b) {
        report.all_unique = false;
        report.counterexample = b;
        break;
      }
    }
    return report;
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(count - 1));
  std::vector<std::array<Vertex, 3>> triples(options.sample_size);
  for (auto& t : triples) {
    do {
      t = {pick(rng), pick(rng), pick(rng)};
    } while (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]);
  }
  std::vector<char> ok(triples.size(), 1);
  detail::parallel_for(triples.size(), workers, [&](std::size_t i, unsigned) {
    const auto [x, y, z] = triples[i];
    int total = 0;
    for (std::size_t u = 0; u < count && total < 2; ++u) {
      if (d(x, u) + d(u, y) == d(x, y) && d(x, u) + d(u, z) == d(x, z) && d(y, u) + d(u, z) == d(y, z)) ++total;
    }
    ok[i] = total == 1;
  });
  report.checked = triples.size();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (!ok[i]) {
      report.all_unique = false;
      report.counterexample = triples[i];
      break;
    }
  }
  return report;
}

std::vector<KPellWord> predicted_periphery(unsigned n, unsigned k) {
  const unsigned blocks = n / 2;
  const Letter top = static_cast<Letter>(k);
  std::vector<std::vector<Letter>> raw;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks); ++mask) {
    std::vector<Letter> base;
    for (unsigned b = 0; b < blocks; ++b) {
      const Letter x = (mask >> (blocks - 1 - b)) & 1 ? top : 0;
      base.push_back(x);
      base.push_back(x);
    }
    if (n % 2 == 0) {
      raw.push_back(base);
      continue;
    }
    for (unsigned at = 0; at <= blocks; ++at) {
      for (Letter extra : {Letter{0}, static_cast<Letter>(k - 1)}) {
        std::vector<Letter> w = base;
        w.insert(w.begin() + 2 * at, extra);
        raw.push_back(std::move(w));
      }
    }
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<KPellWord> out;
  for (auto& r : raw) out.emplace_back(std::move(r), k);
  return out;
}

bool verify_periphery_shape(const LabeledGraph& g, const EccentricityProfile& profile) {
  if (g.family() != Family::kPell) throw DomainError("periphery shape applies to k-Pell graphs");
  std::vector<Vertex> expected;
  for (const auto& w : predicted_periphery(g.length(), g.k())) {
    auto v = g.find(w.letters());
    if (!v) return false;
    expected.push_back(*v);
  }
  std::sort(expected.begin(), expected.end());
  return expected == profile.periphery;
}

}  // namespace kpell
