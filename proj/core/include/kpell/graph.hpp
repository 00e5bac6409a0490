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

#ifndef KPELL_GRAPH_HPP_
#define KPELL_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kpell/words.hpp"

namespace kpell {

using Vertex = std::uint32_t;

enum class Family { kPell, kFibonacci };

// Immutable graph whose vertices are words in lexicographic order.
// Adjacency lists are sorted, symmetric and loop free.
class LabeledGraph {
 public:
  Family family() const { return family_; }
  // Word length: n for Pi(n,k), m for Gamma(m).
  unsigned length() const { return length_; }
  // 0 for Fibonacci cubes.
  unsigned k() const { return k_; }

  std::size_t num_vertices() const { return words_.size(); }
  std::uint64_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  std::span<const Letter> word(Vertex v) const { return words_[v]; }
  std::string label(Vertex v) const { return render_word(words_[v]); }
  const WordList& words() const { return words_; }

  // Index of a word, or nullopt if it is not a vertex. O(length).
  std::optional<Vertex> find(std::span<const Letter> w) const;

 private:
  friend LabeledGraph build_kpell_graph(unsigned, unsigned, std::uint64_t);
  friend LabeledGraph build_fib_cube(unsigned, std::uint64_t);

  LabeledGraph() = default;

  Family family_ = Family::kPell;
  unsigned length_ = 0;
  unsigned k_ = 0;
  WordList words_;
  // counts_[r] = number of vertices of the same family with word length r.
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> adjacency_;
};

// All words adjacent to w: change one letter i <-> i+1 below k, or swap a
// factor (k-1)(k-1) <-> kk where the result stays a k-Pell word.
std::vector<KPellWord> neighbors(const KPellWord& w);

LabeledGraph build_kpell_graph(unsigned n, unsigned k, std::uint64_t budget = kDefaultVertexBudget);
LabeledGraph build_fib_cube(unsigned m, std::uint64_t budget = kDefaultVertexBudget);

// Split of Pi(n,k) by first token: blocks 0..k-1 hold the words starting
// with that letter, block k holds the words starting with kk.
struct Decomposition {
  std::vector<std::vector<Vertex>> blocks;
  // Edges joining two different blocks, (u, v) with u < v.
  std::vector<std::pair<Vertex, Vertex>> links;
};

// Requires a k-Pell graph with n >= 2.
Decomposition decompose(const LabeledGraph& g);

// Vertex order of a Hamiltonian path of a k-Pell graph. The result is
// validated before it is returned; InternalError if construction fails.
std::vector<Vertex> hamiltonian_path(const LabeledGraph& g);
// Every vertex exactly once and consecutive vertices adjacent.
bool validate_path(const LabeledGraph& g, std::span<const Vertex> path);

// Bounded backtracking search for a Hamiltonian cycle. `cycle` is empty
// when none was found; `exhausted` says whether that absence is proven.
struct CycleSearch {
  bool exhausted = false;
  std::optional<std::vector<Vertex>> cycle;
  std::uint64_t nodes = 0;
};
CycleSearch search_hamiltonian_cycle(const LabeledGraph& g, std::uint64_t node_budget);

}  // namespace kpell

#endif  // KPELL_GRAPH_HPP_
