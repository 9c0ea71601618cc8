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

#include "ogc/algorithms.hpp"
#include "ogc/oracles.hpp"
#include "ogc/registry.hpp"
#include "ogc/triangle_free_presenter.hpp"
#include "test_support.hpp"

namespace ogc::trianglefree {
namespace {

TEST(ShiftTable, RowsFillFromTheRight) {
  ShiftTable t(3);
  EXPECT_EQ(t.place(10, 2), (CellPos{2, 3}));
  EXPECT_EQ(t.place(11, 2), (CellPos{2, 2}));
  EXPECT_EQ(t.place(12, 1), (CellPos{1, 3}));
  EXPECT_EQ(t.at(2, 2), 11u);
  EXPECT_EQ(t.at(3, 3), 0u);
  using Col = std::vector<std::pair<std::size_t, VertexId>>;
  EXPECT_EQ(t.column(3), (Col{{1, 12}, {2, 10}}));
  t.place(13, 2);
  EXPECT_THROW(t.place(14, 2), StrategyFailure);
}

TEST(PhaseShouldEnd, NewRowInNextColumn) {
  ShiftTable t(3);
  t.place(1, 1);
  t.place(2, 1);
  EXPECT_FALSE(phase_should_end(t, 2, {1}));
  t.place(3, 2);
  EXPECT_TRUE(phase_should_end(t, 2, {1}));
  EXPECT_FALSE(phase_should_end(t, 2, {1, 2}));
}

TEST(TriangleFreePresenter, FirstFitTraceForThreeColors) {
  TriangleFreePresenter p(3);
  auto a = make_algorithm({AlgorithmKind::FirstFit, 0});
  const auto r = play(p, *a, {3, 100, 0});
  EXPECT_EQ(format_transcript(r.transcript),
            "ogc-transcript v1 presenter=triangle-free algorithm=first-fit c=3 seed=0\n"
            "1;;1;phase=0 |I_k|=0\n"
            "2;;1;phase=0 |I_k|=0\n"
            "3;;1;phase=0 |I_k|=0\n"
            "4;3;2;phase=1 |I_k|=1\n"
            "5;3;2;phase=1 |I_k|=1\n"
            "6;2,5;3;phase=2 |I_k|=2\n");
  const std::vector<CellPos> expected{{1, 3}, {1, 2}, {1, 1}, {2, 3}, {2, 2}, {3, 3}};
  ASSERT_EQ(p.placements().size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(p.placements()[i].first, i + 1);
    EXPECT_EQ(p.placements()[i].second, expected[i]) << i;
  }
}

TEST(TriangleFreePresenter, ReachesTargetWithinSquareBound) {
  for (std::size_t c = 1; c <= 25; ++c) {
    for (auto kind : {AlgorithmKind::FirstFit, AlgorithmKind::RandomAdmissible, AlgorithmKind::FreshColor}) {
      TriangleFreePresenter p(c);
      auto a = make_algorithm({kind, c});
      const auto r = play(p, *a, {c, 100'000, c});
      EXPECT_EQ(r.outcome.stopped, StopReason::TargetReached) << c;
      EXPECT_LE(r.outcome.vertices, c * c) << c;
      EXPECT_TRUE(failed_strategy_checks(r.outcome.stats).empty()) << c;
      EXPECT_TRUE(odd_girth(r.graph).at_least(5)) << c;
    }
    for (std::size_t palette = 1; palette < c; palette += 3) {
      TriangleFreePresenter p(c);
      testing::SpreadingAlgorithm a(palette);
      const auto r = play(p, a, {c, 100'000, 0});
      EXPECT_EQ(r.outcome.stopped, StopReason::TargetReached) << c;
      EXPECT_LE(r.outcome.vertices, c * c) << c;
      EXPECT_FALSE(has_odd_cycle_up_to(r.graph, 3)) << c;
    }
  }
}

TEST(TriangleFreePresenter, NeighborhoodsAreIndependent) {
  TriangleFreePresenter p(12);
  auto a = make_algorithm({AlgorithmKind::FirstFit, 0});
  const auto r = play(p, *a, {12, 1'000, 0});
  for (const auto& round : r.transcript.rounds)
    for (std::size_t i = 0; i < round.neighbors.size(); ++i)
      for (std::size_t j = i + 1; j < round.neighbors.size(); ++j)
        EXPECT_FALSE(r.graph.adjacent(round.neighbors[i], round.neighbors[j])) << round.index;
}

}  // namespace
}  // namespace ogc::trianglefree
