// Copyright 2026 The ogc Authors
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

#include <vector>

#include "ogc/oracles.hpp"
#include "test_support.hpp"

namespace ogc {
namespace {

ColoredGraph cycle(std::size_t n) {
  ColoredGraph g;
  g.add_vertex(std::vector<VertexId>{});
  for (VertexId v = 2; v < n; ++v) g.add_vertex(std::vector<VertexId>{v - 1});
  g.add_vertex(std::vector<VertexId>{1, static_cast<VertexId>(n - 1)});
  return g;
}

TEST(OddGirth, Cycles) {
  EXPECT_EQ(odd_girth(cycle(3)), OddGirth::of(3));
  EXPECT_EQ(odd_girth(cycle(5)), OddGirth::of(5));
  EXPECT_EQ(odd_girth(cycle(9)), OddGirth::of(9));
  EXPECT_TRUE(odd_girth(cycle(8)).is_infinite());
  EXPECT_EQ(odd_girth(cycle(8)).to_string(), "INFINITE");
  EXPECT_EQ(odd_girth(cycle(7)).to_string(), "7");
}

TEST(OddGirth, EmptyAndEdgelessGraphs) {
  ColoredGraph g;
  EXPECT_TRUE(odd_girth(g).is_infinite());
  g.add_vertex(std::vector<VertexId>{});
  g.add_vertex(std::vector<VertexId>{});
  EXPECT_TRUE(odd_girth(g).is_infinite());
  EXPECT_TRUE(is_bipartite(g));
}

TEST(OddGirth, DepthLimitedCheck) {
  const auto c7 = cycle(7);
  EXPECT_FALSE(has_odd_cycle_up_to(c7, 5));
  EXPECT_TRUE(has_odd_cycle_up_to(c7, 7));
  EXPECT_FALSE(has_odd_cycle_up_to_serial(c7, 6));
  EXPECT_TRUE(has_odd_cycle_up_to_serial(c7, 9));
  const VertexId src[] = {4};
  EXPECT_EQ(odd_girth_from_sources(c7, src), OddGirth::of(7));
}

TEST(OddGirth, AgreesWithExhaustiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 8;
    const auto g = testing::random_graph(n, 0.2 + 0.05 * static_cast<double>(seed % 8), seed);
    const std::size_t brute = testing::brute_force_odd_girth(g);
    const auto fast = odd_girth(g);
    const auto serial = odd_girth_serial(g);
    EXPECT_EQ(fast, serial) << "seed " << seed;
    if (brute == 0) {
      EXPECT_TRUE(fast.is_infinite()) << "seed " << seed;
    } else {
      EXPECT_EQ(fast, OddGirth::of(brute)) << "seed " << seed;
    }
    EXPECT_EQ(is_bipartite(g), brute == 0) << "seed " << seed;
    for (std::size_t L = 3; L <= 11; L += 2)
      EXPECT_EQ(has_odd_cycle_up_to(g, L), brute != 0 && brute <= L) << "seed " << seed << " L " << L;
  }
}

TEST(OddGirth, ParallelMatchesSerialOnLargerGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = testing::random_graph(200, 0.012, seed);
    EXPECT_EQ(odd_girth(g), odd_girth_serial(g)) << "seed " << seed;
    EXPECT_EQ(has_odd_cycle_up_to(g, 7), has_odd_cycle_up_to_serial(g, 7)) << "seed " << seed;
  }
}

TEST(Bipartition, SidesOfComponent) {
  const auto g = cycle(6);
  const auto b = bipartition_of_component(g, 2);
  EXPECT_EQ(b.own_side, (std::vector<VertexId>{2, 4, 6}));
  EXPECT_EQ(b.other_side, (std::vector<VertexId>{1, 3, 5}));
  EXPECT_THROW(bipartition_of_component(cycle(5), 1), OddCycle);
}

TEST(ChromaticNumber, KnownGraphs) {
  EXPECT_EQ(chromatic_number(ColoredGraph{}), 0u);
  EXPECT_EQ(chromatic_number(cycle(6)), 2u);
  EXPECT_EQ(chromatic_number(cycle(7)), 3u);
  ColoredGraph k5;
  for (VertexId v = 1; v <= 5; ++v) {
    std::vector<VertexId> nb;
    for (VertexId u = 1; u < v; ++u) nb.push_back(u);
    k5.add_vertex(nb);
  }
  EXPECT_EQ(chromatic_number(k5), 5u);
  // Groetzsch graph: triangle-free, chromatic number 4.
  ColoredGraph gr;
  gr.add_vertex(std::vector<VertexId>{});            // 1  outer 0
  gr.add_vertex(std::vector<VertexId>{1});           // 2  outer 1
  gr.add_vertex(std::vector<VertexId>{2});           // 3  outer 2
  gr.add_vertex(std::vector<VertexId>{3});           // 4  outer 3
  gr.add_vertex(std::vector<VertexId>{1, 4});        // 5  outer 4
  gr.add_vertex(std::vector<VertexId>{2, 5});        // 6  inner 0 ~ outer 1, 4
  gr.add_vertex(std::vector<VertexId>{1, 3});        // 7  inner 1 ~ outer 0, 2
  gr.add_vertex(std::vector<VertexId>{2, 4});        // 8  inner 2 ~ outer 1, 3
  gr.add_vertex(std::vector<VertexId>{3, 5});        // 9  inner 3 ~ outer 2, 4
  gr.add_vertex(std::vector<VertexId>{1, 4});        // 10 inner 4 ~ outer 3, 0
  gr.add_vertex(std::vector<VertexId>{6, 7, 8, 9, 10});
  EXPECT_FALSE(has_odd_cycle_up_to(gr, 3));
  EXPECT_EQ(chromatic_number(gr), 4u);
}

TEST(ChromaticNumber, RefusesLargeGraphs) {
  ColoredGraph g;
  for (std::size_t i = 0; i <= kChromaticOracleLimit; ++i) g.add_vertex(std::vector<VertexId>{});
  EXPECT_THROW(chromatic_number(g), std::length_error);
}

TEST(ProperColoring, Detects) {
  ColoredGraph g;
  g.add_vertex(std::vector<VertexId>{});
  EXPECT_FALSE(is_properly_colored(g));
  g.assign_color(1, 1);
  EXPECT_TRUE(is_properly_colored(g));
}

}  // namespace
}  // namespace ogc
