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

#include "ogc/bipartite_presenter.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>

#include <fmt/format.h>

namespace ogc::bipartite {

namespace {

std::size_t count_missing(const std::set<Color>& from, const std::set<Color>& in) {
  std::size_t missing = 0;
  for (Color c : from)
    if (!in.contains(c)) ++missing;
  return missing;
}

std::set<Color> colors_of(const ColoredGraph& g, std::span<const VertexId> vertices) {
  std::set<Color> colors;
  for (VertexId v : vertices) colors.insert(g.color(v));
  return colors;
}

std::vector<VertexId> merge_sorted(std::vector<VertexId> a, std::span<const VertexId> b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

void orient(ComponentRecord& c, bool flip) {
  if (!flip) return;
  std::swap(c.left, c.right);
  std::swap(c.sel_left, c.sel_right);
  std::swap(c.sel_left_color, c.sel_right_color);
}

// Union-find over dense color indices.
struct Forest {
  std::vector<std::size_t> parent;
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

}  // namespace

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::MergeDifferent: return "merge-diff";
    case RuleKind::MergeSimilar: return "merge-sim";
    case RuleKind::MergeEqual: return "merge-eq";
    case RuleKind::Introduce: return "introduce";
  }
  return "unknown";
}

ColorClassification recompute_classification(const ColoredGraph& g, const ComponentRecord& c) {
  const auto left = colors_of(g, c.left);
  const auto right = colors_of(g, c.right);
  ColorClassification out;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::inserter(out.two_sided, out.two_sided.end()));
  std::set_symmetric_difference(left.begin(), left.end(), right.begin(), right.end(),
                                std::inserter(out.one_sided, out.one_sided.end()));
  return out;
}

std::optional<EqualCycle> find_equal_cycle(std::span<const std::pair<Color, Color>> pairs) {
  std::map<Color, std::size_t> index;
  for (const auto& [x, y] : pairs) {
    index.emplace(x, index.size());
    index.emplace(y, index.size());
  }
  Forest forest{std::vector<std::size_t>(index.size())};
  std::iota(forest.parent.begin(), forest.parent.end(), 0);
  // Forest adjacency: color index -> (neighbor color index, edge index).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tree(index.size());
  std::vector<Color> color_of(index.size());
  for (const auto& [color, i] : index) color_of[i] = color;

  for (std::size_t e = 0; e < pairs.size(); ++e) {
    const std::size_t x = index[pairs[e].first];
    const std::size_t y = index[pairs[e].second];
    if (x == y) continue;
    if (forest.find(x) != forest.find(y)) {
      forest.parent[forest.find(x)] = forest.find(y);
      tree[x].push_back({y, e});
      tree[y].push_back({x, e});
      continue;
    }

    // Edge e closes a cycle: x -e- y, then the unique tree path y ~> x.
    std::vector<std::size_t> via(index.size(), pairs.size());
    std::vector<std::size_t> from(index.size(), index.size());
    std::vector<std::size_t> queue{y};
    from[y] = y;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto [next, edge] : tree[queue[head]]) {
        if (from[next] != index.size()) continue;
        from[next] = queue[head];
        via[next] = edge;
        queue.push_back(next);
      }
    }
    std::vector<std::size_t> path_nodes;  // x back to y
    std::vector<std::size_t> path_edges;
    for (std::size_t at = x; at != y; at = from[at]) {
      path_nodes.push_back(at);
      path_edges.push_back(via[at]);
    }
    // Walk: x, e, y, then y ~> x in forward order.
    EqualCycle cycle;
    cycle.edges.push_back(e);
    cycle.colors.push_back(color_of[x]);
    cycle.colors.push_back(color_of[y]);
    for (std::size_t i = path_edges.size(); i-- > 0;) {
      cycle.edges.push_back(path_edges[i]);
      if (i > 0) cycle.colors.push_back(color_of[path_nodes[i]]);
    }

    const std::size_t k = cycle.edges.size();
    const auto lowest = static_cast<std::size_t>(
        std::min_element(cycle.edges.begin(), cycle.edges.end()) - cycle.edges.begin());
    std::rotate(cycle.edges.begin(), cycle.edges.begin() + lowest, cycle.edges.end());
    std::rotate(cycle.colors.begin(), cycle.colors.begin() + lowest, cycle.colors.end());
    if (k == 2) {
      if (cycle.colors[0] > cycle.colors[1]) std::swap(cycle.colors[0], cycle.colors[1]);
    } else if (cycle.edges[k - 1] < cycle.edges[1]) {
      std::reverse(cycle.edges.begin() + 1, cycle.edges.end());
      std::vector<Color> reversed(k);
      for (std::size_t j = 0; j < k; ++j) reversed[j] = cycle.colors[(k + 1 - j) % k];
      cycle.colors = std::move(reversed);
    }
    return cycle;
  }
  return std::nullopt;
}

RuleChoice select_rule(std::span<const ComponentRecord> components) {
  const std::size_t n = components.size();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c1 = components[i];
      const auto& c2 = components[j];
      if (c1.level() == c2.level() && count_missing(c1.ts, c2.ts) >= 2)
        return {RuleKind::MergeDifferent, {c1.id, c2.id}, {false, false}, {}};
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c1 = components[i];
      const auto& c2 = components[j];
      if (c1.level() != c2.level() || count_missing(c1.ts, c2.ts) != 1) continue;
      std::optional<Color> shared;
      for (Color c : {c1.sel_left_color, c1.sel_right_color})
        if (c2.sel_has(c) && (!shared || c < *shared)) shared = c;
      if (!shared) continue;
      // The shared color goes left in C1 and right in C2.
      return {RuleKind::MergeSimilar,
              {c1.id, c2.id},
              {c1.sel_left_color != *shared, c2.sel_right_color != *shared},
              {}};
    }

  // Families of components with identical ts, ordered by their oldest member.
  std::vector<std::vector<std::size_t>> families;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find_if(families.begin(), families.end(), [&](const auto& family) {
      return components[family.front()].ts == components[i].ts;
    });
    if (it == families.end()) families.push_back({i});
    else it->push_back(i);
  }
  for (const auto& family : families) {
    if (family.size() < 2) continue;
    std::vector<std::pair<Color, Color>> pairs;
    for (std::size_t i : family)
      pairs.emplace_back(components[i].sel_left_color, components[i].sel_right_color);
    auto cycle = find_equal_cycle(pairs);
    if (!cycle) continue;
    RuleChoice choice{RuleKind::MergeEqual, {}, {}, cycle->colors};
    for (std::size_t idx = 0; idx < cycle->edges.size(); ++idx) {
      const auto& c = components[family[cycle->edges[idx]]];
      choice.operands.push_back(c.id);
      // a_idx on the left, a_{idx+1} on the right.
      choice.flip.push_back(c.sel_left_color != cycle->colors[idx]);
    }
    return choice;
  }

  return {RuleKind::Introduce, {}, {}, {}};
}

bool within_size_bound(std::size_t size, std::size_t level) {
  // size <= 2^(level/2 + 2) - 2  <=>  (size + 2)^2 <= 2^(level + 4)
  const std::size_t power = level + 4;
  if (power >= 64) return true;
  const unsigned __int128 lhs = static_cast<unsigned __int128>(size + 2) * (size + 2);
  return lhs <= (static_cast<unsigned __int128>(1) << power);
}

BipartitePresenter::BipartitePresenter(std::size_t target_colors) : target_(target_colors) {
  for (const char* key : {"phases", "introduce", "merge_different", "merge_similar", "merge_equal",
                          "max_level", "invariant1_violations", "invariant2_violations",
                          "census_violations", "sel_violations", "ts_mismatches",
                          "level_gain_violations"})
    counters_[key] = 0;
}

BipartitePresenter::PendingPhase BipartitePresenter::plan_phase(RuleChoice rule) {
  PendingPhase p;
  for (std::size_t i = 0; i < rule.operands.size(); ++i) {
    auto it = std::find_if(components_.begin(), components_.end(),
                           [&](const ComponentRecord& c) { return c.id == rule.operands[i]; });
    if (it == components_.end())
      throw StrategyFailure(fmt::format("rule names unknown component {}", rule.operands[i]));
    ComponentRecord c = *it;
    orient(c, rule.flip[i]);
    p.a_neighbors = merge_sorted(std::move(p.a_neighbors), c.left);
    p.b_neighbors = merge_sorted(std::move(p.b_neighbors), c.right);
    p.operands.push_back(std::move(c));
  }
  p.annotation = fmt::format("phase={} rule={} k={}", phase_, to_string(rule.kind), rule.operands.size());
  p.rule = std::move(rule);
  return p;
}

std::optional<Move> BipartitePresenter::next_move(const ColoredGraph& /*graph*/) {
  if (!pending_) {
    ++phase_;
    pending_ = plan_phase(select_rule(components_));
    return Move{pending_->a_neighbors, pending_->annotation};
  }
  if (pending_->a == 0) throw StrategyFailure("vertex a was never observed");
  auto neighbors = pending_->b_neighbors;
  neighbors.push_back(pending_->a);
  return Move{std::move(neighbors), pending_->annotation};
}

void BipartitePresenter::observe(VertexId vertex, Color /*color*/, const ColoredGraph& graph) {
  if (!pending_) throw StrategyFailure("observed a vertex outside any phase");
  if (pending_->a == 0) {
    pending_->a = vertex;
    return;
  }
  pending_->b = vertex;
  finish_phase(graph);
}

void BipartitePresenter::finish_phase(const ColoredGraph& g) {
  PendingPhase done = std::move(*pending_);
  pending_.reset();

  ComponentRecord merged;
  merged.id = next_id_++;
  merged.created_phase = phase_;
  merged.left = {done.b};
  merged.right = {done.a};
  merged.sel_left = done.b;
  merged.sel_right = done.a;
  merged.sel_left_color = g.color(done.b);
  merged.sel_right_color = g.color(done.a);

  // ts(C) = union of ts(C_i), plus colors one-sided on the left of some C_i
  // and one-sided on the right of a different C_j.
  std::vector<std::set<Color>> left_only(done.operands.size()), right_only(done.operands.size());
  for (std::size_t i = 0; i < done.operands.size(); ++i) {
    const auto& op = done.operands[i];
    merged.left = merge_sorted(std::move(merged.left), op.left);
    merged.right = merge_sorted(std::move(merged.right), op.right);
    merged.ts.insert(op.ts.begin(), op.ts.end());
    const auto l = colors_of(g, op.left);
    const auto r = colors_of(g, op.right);
    std::set_difference(l.begin(), l.end(), r.begin(), r.end(),
                        std::inserter(left_only[i], left_only[i].end()));
    std::set_difference(r.begin(), r.end(), l.begin(), l.end(),
                        std::inserter(right_only[i], right_only[i].end()));
  }
  for (std::size_t i = 0; i < done.operands.size(); ++i)
    for (std::size_t j = 0; j < done.operands.size(); ++j) {
      if (i == j) continue;
      for (Color c : left_only[i])
        if (right_only[j].contains(c)) merged.ts.insert(c);
    }

  std::erase_if(components_, [&](const ComponentRecord& c) {
    return std::find(done.rule.operands.begin(), done.rule.operands.end(), c.id) !=
           done.rule.operands.end();
  });
  components_.push_back(std::move(merged));

  switch (done.rule.kind) {
    case RuleKind::MergeDifferent: ++counters_["merge_different"]; break;
    case RuleKind::MergeSimilar: ++counters_["merge_similar"]; break;
    case RuleKind::MergeEqual: ++counters_["merge_equal"]; break;
    case RuleKind::Introduce: ++counters_["introduce"]; break;
  }
  ++counters_["phases"];
  check_after_phase(g, done);
}

void BipartitePresenter::check_after_phase(const ColoredGraph& g, const PendingPhase& done) {
  const ComponentRecord& fresh = components_.back();

  const auto classes = recompute_classification(g, fresh);
  if (classes.two_sided != fresh.ts) ++counters_["ts_mismatches"];
  if (!classes.one_sided.contains(fresh.sel_left_color) ||
      !classes.one_sided.contains(fresh.sel_right_color) ||
      fresh.sel_left_color == fresh.sel_right_color)
    ++counters_["sel_violations"];

  for (const auto& c : components_)
    if (!within_size_bound(c.size(), c.level())) ++counters_["invariant1_violations"];

  std::size_t min_level = 0;
  if (!done.operands.empty()) {
    min_level = done.operands.front().level();
    for (const auto& op : done.operands) min_level = std::min(min_level, op.level());
    const std::size_t gain = done.rule.kind == RuleKind::MergeEqual ? done.operands.size() : 2;
    if (fresh.level() < min_level + gain) ++counters_["level_gain_violations"];
  }
  counters_["max_level"] =
      std::max<std::int64_t>(counters_["max_level"], static_cast<std::int64_t>(fresh.level()));

  const auto older = std::span<const ComponentRecord>(components_).first(components_.size() - 1);
  if (select_rule(older).kind != RuleKind::Introduce) ++counters_["invariant2_violations"];

  // With fewer than c colors in play, at most c - l - 2 older components sit
  // at level l.
  if (g.distinct_colors() < target_) {
    std::map<std::size_t, std::size_t> per_level;
    for (const auto& c : older) ++per_level[c.level()];
    for (auto [level, count] : per_level)
      if (level + 2 > target_ || count > target_ - level - 2) ++counters_["census_violations"];
  }

  reports_.push_back({phase_, done.rule.kind, done.operands.size(), fresh.size(), fresh.level(),
                      min_level});
}

StrategyStats BipartitePresenter::stats() const {
  auto out = counters_;
  out["components"] = static_cast<std::int64_t>(components_.size());
  return out;
}

}  // namespace ogc::bipartite
