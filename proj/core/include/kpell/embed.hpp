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

#ifndef KPELL_EMBED_HPP_
#define KPELL_EMBED_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kpell/graph.hpp"

namespace kpell {

// (2k-2) n - 1.
unsigned embedding_dimension(unsigned n, unsigned k);

// Token-wise map into Fibonacci strings. Letter i < k becomes
// (10)^(k-1-i) 0^(2i); the digraph kk becomes 01 0^(4k-6). The final 0 of
// the concatenation is dropped, so the image has length (2k-2) n - 1.
// Tokens are formed by pairing each run of k greedily from the left.
FibWord phi(const KPellWord& w);
std::vector<Letter> phi_letters(std::span<const Letter> w, unsigned k);

inline constexpr unsigned kMaterializeLimit = 28;

struct EmbeddingCertificate {
  unsigned n = 0;
  unsigned k = 0;
  unsigned target_dim = 0;
  // Every image is a Fibonacci string of length target_dim.
  bool images_valid = true;
  bool injective = true;
  bool edges_preserved = true;
  std::uint64_t checked_edges = 0;
  // True when edges were looked up in a built Fibonacci cube rather than
  // checked as single-bit differences.
  bool target_materialized = false;
  // First failure, empty when the certificate is valid.
  std::string failure;

  bool valid() const { return images_valid && injective && edges_preserved; }
};

// Maps every vertex of g (a k-Pell graph) and checks the certificate. The
// target cube is built when target_dim <= materialize_limit.
EmbeddingCertificate verify_embedding(const LabeledGraph& g, unsigned threads = 0,
                                      unsigned materialize_limit = kMaterializeLimit);

// Smallest m <= max_m such that g is isomorphic to a subgraph of the
// Fibonacci cube of dimension m, by exhaustive backtracking. nullopt if
// none is found or the node budget runs out; `exhausted` tells which.
struct EmbedDimSearch {
  std::optional<unsigned> dimension;
  bool exhausted = true;
  std::uint64_t nodes = 0;
};
EmbedDimSearch search_min_embedding_dimension(const LabeledGraph& g, unsigned max_m, std::uint64_t node_budget);

}  // namespace kpell

#endif  // KPELL_EMBED_HPP_
