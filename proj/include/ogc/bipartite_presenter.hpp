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

// Presenter for bipartite graphs that forces c colors within
// (8 + 7*sqrt(2)) * 2^(c/2) vertices.
//
// The graph is a disjoint union of components. Every phase adds exactly two
// adjacent vertices a and b: either as a fresh single-edge component, or
// merging components of equal level, with a joined to every vertex on the
// "left" sides and b to every vertex on the "right" sides. A color is
// two-sided in a component when it occurs on both of its sides; the level
// is the number of two-sided colors. Each phase applies the first rule that
// fits, in this order:
//
//   merge-diff  two components, same level, ts(C1) \ ts(C2) has >= 2 colors
//   merge-sim   two components, same level, one color apart, sel colors meet
//   merge-eq    k >= 2 components with equal ts whose sel color pairs form a
//               cycle a1-a2, a2-a3, ..., ak-a1
//   introduce   a new single edge
//
// The bookkeeping is checked after every phase and each failed check is
// counted in stats() rather than thrown, so a run reports all of them.

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ogc/engine.hpp"

namespace ogc::bipartite {

struct ComponentRecord {
  std::size_t id = 0;  // creation order, unique per game
  std::size_t created_phase = 0;
  std::vector<VertexId> left;   // sorted
  std::vector<VertexId> right;  // sorted
  std::set<Color> ts;
  // Selected vertices: one per side, both carrying one-sided colors.
  VertexId sel_left = 0;
  VertexId sel_right = 0;
  Color sel_left_color = kUncolored;
  Color sel_right_color = kUncolored;

  std::size_t size() const { return left.size() + right.size(); }
  std::size_t level() const { return ts.size(); }
  bool sel_has(Color c) const { return c == sel_left_color || c == sel_right_color; }
};

struct ColorClassification {
  std::set<Color> one_sided;
  std::set<Color> two_sided;
};

/// Colors of the component split by whether they occur on one or both sides.
ColorClassification recompute_classification(const ColoredGraph& g, const ComponentRecord& c);

enum class RuleKind { MergeDifferent, MergeSimilar, MergeEqual, Introduce };

std::string_view to_string(RuleKind kind);

struct RuleChoice {
  RuleKind kind = RuleKind::Introduce;
  std::vector<std::size_t> operands;  // component ids, in merge order
  std::vector<bool> flip;             // swap stored left/right of operand i
  std::vector<Color> cycle_colors;    // merge-eq only: a_1..a_k
};

struct EqualCycle {
  std::vector<std::size_t> edges;  // indices into the input, cycle order
  std::vector<Color> colors;       // edge i joins colors[i] and colors[(i+1) % k]
};

/// Looks for a cycle in the multigraph whose vertices are colors and whose
/// i-th edge joins the two colors of `pairs[i]`. Edges are added in input
/// order; the first edge closing a cycle is used together with the forest
/// path between its endpoints. The cycle starts at its lowest edge index
/// and runs toward the lower-indexed of that edge's two cycle neighbors.
std::optional<EqualCycle> find_equal_cycle(std::span<const std::pair<Color, Color>> pairs);

/// First applicable rule over `components` (kept in creation order).
RuleChoice select_rule(std::span<const ComponentRecord> components);

/// Upper bound on a component of the given level: 2^(level/2 + 2) - 2,
/// compared exactly.
bool within_size_bound(std::size_t size, std::size_t level);

struct PhaseReport {
  std::size_t phase = 0;
  RuleKind rule = RuleKind::Introduce;
  std::size_t merged = 0;  // number of operands (k), 0 for introduce
  std::size_t new_component_size = 0;
  std::size_t new_component_level = 0;
  std::size_t min_operand_level = 0;
};

class BipartitePresenter final : public Presenter {
 public:
  explicit BipartitePresenter(std::size_t target_colors);

  std::string name() const override { return "bipartite"; }
  std::optional<Move> next_move(const ColoredGraph& graph) override;
  void observe(VertexId vertex, Color color, const ColoredGraph& graph) override;
  StrategyStats stats() const override;

  std::span<const ComponentRecord> components() const { return components_; }
  std::span<const PhaseReport> phase_reports() const { return reports_; }

 private:
  struct PendingPhase {
    RuleChoice rule;
    std::vector<ComponentRecord> operands;  // already oriented
    std::vector<VertexId> a_neighbors;
    std::vector<VertexId> b_neighbors;
    VertexId a = 0;
    VertexId b = 0;
    std::string annotation;
  };

  PendingPhase plan_phase(RuleChoice rule);
  void finish_phase(const ColoredGraph& g);
  void check_after_phase(const ColoredGraph& g, const PendingPhase& done);

  std::size_t target_;
  std::vector<ComponentRecord> components_;
  std::size_t next_id_ = 0;
  std::size_t phase_ = 0;  // phases started
  std::optional<PendingPhase> pending_;
  std::vector<PhaseReport> reports_;
  StrategyStats counters_;
};

}  // namespace ogc::bipartite
