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


#include <gtest/gtest.h>

#include <set>

#include "kpell/embed.hpp"
#include "kpell/error.hpp"
#include "oracles.hpp"

namespace kpell {
namespace {

std::string phi_of(const char* w, unsigned k) { return phi(KPellWord::parse(w, k)).str(); }

TEST(Embed, Dimension) {
  EXPECT_EQ(embedding_dimension(1, 2), 1u);
  EXPECT_EQ(embedding_dimension(2, 3), 7u);
  EXPECT_EQ(embedding_dimension(5, 5), 39u);
  EXPECT_THROW(embedding_dimension(0, 3), DomainError);
}

TEST(Embed, Images) {
  EXPECT_EQ(phi_of("12", 3), "1000000");
  EXPECT_EQ(phi_of("22", 2), "010");
  EXPECT_EQ(phi_of("0", 2), "1");
  EXPECT_EQ(phi_of("1", 2), "0");
  EXPECT_EQ(phi_of("00", 3), "1010101");
  EXPECT_EQ(phi_of("33", 3), "0100000");
  EXPECT_EQ(phi_of("0", 4), "10101");
  EXPECT_THROW(phi_letters(parse_letters("3"), 3), DomainError);
  EXPECT_THROW(phi_letters({}, 3), DomainError);
}

// Token images concatenate; only the very last 0 is dropped.
TEST(Embed, TokenConcatenation) {
  for (unsigned k = 2; k <= 5; ++k) {
    for (const auto& w : enumerate_kpell(4, k)) {
      auto full = phi_letters(w.letters(), k);
      full.push_back(0);
      std::vector<Letter> built;
      for (std::size_t p = 0; p < w.size();) {
        const bool pair = w[p] == k;
        auto token = phi_letters(std::vector<Letter>(pair ? 2 : 1, w[p]), k);
        token.push_back(0);
        built.insert(built.end(), token.begin(), token.end());
        p += pair ? 2 : 1;
      }
      EXPECT_EQ(full, built) << w.str();
    }
  }
}

TEST(Embed, CertificateOnSmallGraphs) {
  for (unsigned k = 2; k <= 6; ++k) {
    for (unsigned n = 1; n <= 5; ++n) {
      auto g = build_kpell_graph(n, k);
      auto c = verify_embedding(g, 1);
      EXPECT_TRUE(c.valid()) << n << "," << k << ": " << c.failure;
      EXPECT_EQ(c.checked_edges, g.num_edges());
      EXPECT_EQ(c.target_materialized, c.target_dim <= kMaterializeLimit);
      auto hamming = verify_embedding(g, 2, 0);
      EXPECT_TRUE(hamming.valid());
      EXPECT_FALSE(hamming.target_materialized);
    }
  }
  EXPECT_THROW(verify_embedding(build_fib_cube(3)), DomainError);
}

TEST(Embed, IndependentImageChecks) {
  for (unsigned k = 2; k <= 4; ++k) {
    auto o = oracle::kpell_graph(4, k);
    std::set<oracle::Word> seen;
    for (std::size_t v = 0; v < o.words.size(); ++v) {
      auto img = phi_letters(o.words[v], k);
      EXPECT_EQ(img.size(), embedding_dimension(4, k));
      EXPECT_TRUE(oracle::fib_word(img));
      EXPECT_TRUE(seen.insert(img).second);
      for (auto u : o.adj[v]) EXPECT_TRUE(oracle::fib_adjacent(img, phi_letters(o.words[u], k)));
    }
  }
}

TEST(Embed, SmallestDimensionSearch) {
  auto one = search_min_embedding_dimension(build_kpell_graph(1, 2), 5, 1'000);
  ASSERT_TRUE(one.dimension.has_value());
  EXPECT_EQ(*one.dimension, 1u);
  auto path3 = search_min_embedding_dimension(build_kpell_graph(1, 3), 5, 1'000);
  EXPECT_EQ(path3.dimension, 2u);
  auto pell2 = search_min_embedding_dimension(build_kpell_graph(2, 2), 5, 100'000);
  EXPECT_EQ(pell2.dimension, 3u);
  auto none = search_min_embedding_dimension(build_kpell_graph(2, 3), 2, 100'000);
  EXPECT_FALSE(none.dimension.has_value());
  EXPECT_TRUE(none.exhausted);
  auto capped = search_min_embedding_dimension(build_kpell_graph(3, 3), 20, 5);
  EXPECT_FALSE(capped.exhausted);
}

}  // namespace
}  // namespace kpell
