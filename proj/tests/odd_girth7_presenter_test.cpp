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
#include "ogc/odd_girth7_presenter.hpp"
#include "ogc/oracles.hpp"
#include "ogc/registry.hpp"
#include "ogc/verify.hpp"
#include "test_support.hpp"

namespace ogc::oddgirth7 {
namespace {

std::vector<FanVertex> fan_by_rows(const std::vector<std::size_t>& per_row) {
  std::vector<FanVertex> fan;
  VertexId v = 100;
  for (std::size_t row = 1; row <= per_row.size(); ++row)
    for (std::size_t i = 0; i < per_row[row - 1]; ++i) fan.push_back({v++, row});
  return fan;
}

TEST(FanSize, SmallTargets) {
  EXPECT_EQ(fan_size(1), 9u);
  EXPECT_EQ(fan_size(2), 18u);
  EXPECT_EQ(fan_size(3), 36u);
  EXPECT_EQ(fan_size(6), 72u);
}

TEST(WeightedTable, CapacityAndAvailability) {
  WeightedTable t(1);
  EXPECT_EQ(t.columns(), 3u);
  for (VertexId v = 1; v <= 3; ++v) t.put(1, 1, {v, Weight(1)});
  EXPECT_TRUE(t.blocked(1, 1));
  EXPECT_TRUE(t.available(1, 2));
  EXPECT_EQ(t.available_right_of(1, 0), 1u);
  EXPECT_THROW(t.put(1, 1, {4, Weight(0)}), StrategyFailure);
  EXPECT_EQ(t.row_weight(1), Weight(3));
}

TEST(Rule1, ColorAvailableHereButBlockedToTheRight) {
  WeightedTable t(1);
  EXPECT_FALSE(rule1_broken(t, 0));
  for (VertexId v = 1; v <= 3; ++v) t.put(1, 1, {v, Weight(0)});
  EXPECT_FALSE(rule1_broken(t, 0));
  for (VertexId v = 4; v <= 6; ++v) t.put(1, 2, {v, Weight(0)});
  EXPECT_TRUE(rule1_broken(t, 0));
}

TEST(Rule2, LeastCellEarliestVertices) {
  WeightedTable t(2);
  const auto fan = fan_by_rows({0, 18});
  const auto res = try_rule2(t, fan, 0);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->rule, 2);
  EXPECT_EQ(res->column, 1u);
  EXPECT_EQ(res->blocked_row, 2u);
  ASSERT_EQ(res->placed.size(), 6u);
  EXPECT_EQ(res->placed.front().vertex, 100u);
  EXPECT_EQ(res->placed.back().vertex, 105u);
  EXPECT_EQ(res->placed.front().weight, Weight(0));
  EXPECT_EQ(res->discarded.size(), 12u);

  apply(t, *res);
  EXPECT_TRUE(t.blocked(2, 1));
  // A partly filled cell needs fewer vertices.
  for (VertexId v = 1; v <= 4; ++v) t.put(1, 3, {v, Weight(0)});
  const auto small = fan_by_rows({2});
  const auto res2 = try_rule2(t, small, 0);
  ASSERT_TRUE(res2);
  EXPECT_EQ(res2->column, 3u);
  EXPECT_EQ(res2->placed.size(), 2u);
  EXPECT_FALSE(try_rule2(t, fan_by_rows({1}), 0));
}

TEST(Rule3, WeightsAndColumnChoice) {
  WeightedTable t(5);
  const auto fan = fan_by_rows({12, 12, 12, 12, 12});
  ASSERT_FALSE(try_rule2(t, fan, 0));
  const auto res = rule3_interesting(t, fan, 0);
  EXPECT_EQ(res.rule, 3);
  EXPECT_EQ(res.column, 1u);  // every column scores the same
  EXPECT_EQ(res.placed.size(), 60u);
  EXPECT_EQ(res.placed.front().weight, Weight(15, 14));
  EXPECT_EQ(res.placed_weight, Weight(60 * 15, 14));
  EXPECT_EQ(res.edge_weight, Weight(60 * 15));
  EXPECT_EQ(res.anomalies, 0u);
  EXPECT_GE(res.placed_weight, Weight(60));
  apply(t, res);
  EXPECT_EQ(t.cell(1, 1).size(), 12u);
  EXPECT_TRUE(weight_census_holds(t, 1));
}

TEST(Rule3, PrefersHeavierColumn) {
  WeightedTable t(5);
  // Block row 1 in column 1: its fan vertices only score elsewhere.
  for (VertexId v = 1; v <= 15; ++v) t.put(1, 1, {v, Weight(0)});
  const auto fan = fan_by_rows({12, 12, 12, 12, 12});
  const auto res = rule3_interesting(t, fan, 0);
  EXPECT_EQ(res.column, 2u);
  EXPECT_EQ(res.placed.size(), 60u);
  // Row 1 sees 13 available columns, the others 14.
  EXPECT_EQ(res.placed.front().weight, Weight(15, 13));
}

TEST(Bounds, HarmonicAndLogarithmic) {
  // 9 c^2 H(3c) for c = 1: 9 * (1 + 1/2 + 1/3) = 16.5
  EXPECT_TRUE(row_within_harmonic_bound(Weight(33, 2), 1));
  EXPECT_FALSE(row_within_harmonic_bound(Weight(33, 2) + Weight(1, 1000000), 1));
  // 9 (1 + ln 3) = 18.887...
  EXPECT_TRUE(row_below_log_bound(Weight(18), 1));
  EXPECT_FALSE(row_below_log_bound(Weight(19), 1));
}

TEST(OddGirth7Presenter, FirstFitTwoColors) {
  OddGirth7Presenter p(2);
  auto a = make_algorithm({AlgorithmKind::FirstFit, 0});
  const auto r = play(p, *a, {2, 100'000, 0});
  EXPECT_EQ(r.outcome.stopped, StopReason::TargetReached);
  EXPECT_EQ(r.outcome.vertices, 91u);
  EXPECT_EQ(r.outcome.stat("broken_phases"), 1);
  for (std::size_t j = 1; j <= 5; ++j) EXPECT_TRUE(p.table().blocked(1, j)) << j;
  EXPECT_TRUE(p.table().available(1, 0));
  EXPECT_TRUE(failed_strategy_checks(r.outcome.stats).empty());
  EXPECT_EQ(r.transcript.rounds[0].annotation, "phase=0 group=0 fan=0 rule=2 col=1");
  EXPECT_EQ(r.transcript.rounds[6].annotation, "phase=0 group=0 fan=0 rule=2 col=-1");
  std::string why;
  EXPECT_TRUE(column_structure_ok(r.transcript, r.graph, &why)) << why;
}

TEST(OddGirth7Presenter, OneColor) {
  OddGirth7Presenter p(1);
  auto a = make_algorithm({AlgorithmKind::FirstFit, 0});
  const auto r = play(p, *a, {1, 100, 0});
  EXPECT_EQ(r.outcome.vertices, 1u);
}

TEST(OddGirth7Presenter, LedgerHoldsWhenInterestingFansOccur) {
  std::int64_t interesting = 0;
  for (std::size_t c = 2; c <= 6; ++c) {
    for (std::size_t palette = 1; palette < c; ++palette) {
      OddGirth7Presenter p(c);
      testing::SpreadingAlgorithm a(palette);
      const auto r = play(p, a, {c, default_round_cap(PresenterKind::OddGirth7, c), 0});
      EXPECT_EQ(r.outcome.stopped, StopReason::TargetReached) << c << " " << palette;
      EXPECT_TRUE(failed_strategy_checks(r.outcome.stats).empty()) << c << " " << palette;
      EXPECT_TRUE(ogc::within_size_bound(PresenterKind::OddGirth7, c, r.outcome.vertices));
      std::string why;
      EXPECT_TRUE(column_structure_ok(r.transcript, r.graph, &why)) << why;
      EXPECT_FALSE(has_odd_cycle_up_to(r.graph, 5)) << c << " " << palette;
      interesting += r.outcome.stat("interesting_fans");
      for (const auto& fan : p.fans())
        if (fan.disposition == FanDisposition::Interesting)
          EXPECT_GE(fan.placed_weight, Weight(static_cast<long>(fan.vertices.size())));
      for (std::size_t row = 1; row <= c; ++row) {
        EXPECT_TRUE(row_within_harmonic_bound(p.table().row_weight(row), c));
        EXPECT_TRUE(weight_census_holds(p.table(), row));
      }
    }
  }
  EXPECT_GT(interesting, 0);
}

}  // namespace
}  // namespace ogc::oddgirth7
