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

#include "ogc/odd_girth7_presenter.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

namespace ogc::oddgirth7 {

namespace {

Weight ratio(std::size_t num, std::size_t den) {
  return Weight(static_cast<long long>(num)) / Weight(static_cast<long long>(den));
}

}  // namespace

WeightedTable::WeightedTable(std::size_t c) : c_(c), cells_(c * 3 * c) {}

std::size_t WeightedTable::index(std::size_t row, std::size_t column) const {
  if (row < 1 || row > c_ || column >= columns())
    throw StrategyFailure(fmt::format("cell ({}, {}) outside a {}x{} table", row, column, c_, columns()));
  return (row - 1) * columns() + column;
}

std::span<const TableEntry> WeightedTable::cell(std::size_t row, std::size_t column) const {
  return cells_[index(row, column)];
}

bool WeightedTable::available(std::size_t row, std::size_t column) const {
  return cells_[index(row, column)].size() < capacity();
}

std::size_t WeightedTable::available_right_of(std::size_t row, std::size_t column) const {
  std::size_t count = 0;
  for (std::size_t j = column + 1; j < columns(); ++j)
    if (available(row, j)) ++count;
  return count;
}

void WeightedTable::put(std::size_t row, std::size_t column, TableEntry entry) {
  auto& cell = cells_[index(row, column)];
  if (cell.size() >= capacity())
    throw StrategyFailure(fmt::format("cell ({}, {}) overflows its capacity {}", row, column, capacity()));
  cell.push_back(std::move(entry));
}

Weight WeightedTable::row_weight(std::size_t row) const {
  Weight total = 0;
  for (const auto& w : row_weights(row)) total += w;
  return total;
}

std::vector<Weight> WeightedTable::row_weights(std::size_t row) const {
  std::vector<Weight> out;
  for (std::size_t j = 0; j < columns(); ++j)
    for (const auto& e : cell(row, j)) out.push_back(e.weight);
  return out;
}

std::size_t fan_size(std::size_t c) {
  const double width = 3.0 * static_cast<double>(c);
  return 3 * c * (1 + static_cast<std::size_t>(std::ceil(std::log(width))));
}

std::vector<std::vector<VertexId>> split_groups(const WeightedTable& table, std::size_t k) {
  std::vector<std::vector<VertexId>> groups(table.capacity());
  if (k == 0) return groups;
  for (std::size_t row = 1; row <= table.rows(); ++row) {
    if (!table.blocked(row, k)) continue;
    const auto cell = table.cell(row, k);
    for (std::size_t g = 0; g < groups.size(); ++g) groups[g].push_back(cell[g].vertex);
  }
  return groups;
}

bool rule1_broken(const WeightedTable& table, std::size_t k) {
  for (std::size_t row = 1; row <= table.rows(); ++row)
    if (table.available(row, k) && table.available_right_of(row, k) == 0) return true;
  return false;
}

std::optional<FanResolution> try_rule2(const WeightedTable& table, std::span<const FanVertex> fan,
                                       std::size_t k) {
  std::map<std::size_t, std::size_t> per_row;
  for (const auto& f : fan) ++per_row[f.row];
  for (std::size_t row = 1; row <= table.rows(); ++row) {
    const std::size_t have = per_row.contains(row) ? per_row[row] : 0;
    if (have == 0) continue;
    for (std::size_t j = k + 1; j < table.columns(); ++j) {
      const std::size_t m = table.cell(row, j).size();
      if (m >= table.capacity() || have < table.capacity() - m) continue;

      FanResolution res;
      res.rule = 2;
      res.column = j;
      res.blocked_row = row;
      std::size_t need = table.capacity() - m;
      for (const auto& f : fan) {
        if (f.row == row && need > 0) {
          res.placed.push_back({f.vertex, row, j, Weight(0)});
          --need;
        } else {
          res.discarded.push_back(f.vertex);
        }
      }
      res.placed_weight = 0;
      return res;
    }
  }
  return std::nullopt;
}

FanResolution rule3_interesting(const WeightedTable& table, std::span<const FanVertex> fan,
                                std::size_t k) {
  const std::size_t width = table.capacity();  // 3c
  FanResolution res;
  res.rule = 3;

  std::map<std::size_t, std::size_t> per_row;
  for (const auto& f : fan) ++per_row[f.row];
  std::map<std::size_t, std::size_t> t;
  std::map<std::size_t, Weight> weight;
  for (auto [row, count] : per_row) {
    t[row] = table.available_right_of(row, k);
    if (t[row] == 0) {
      res.anomalies += count;
      continue;
    }
    weight[row] = ratio(width, t[row]);
    res.edge_weight += Weight(static_cast<long long>(count * t[row])) * weight[row];
  }

  std::optional<std::size_t> best;
  Weight best_score = -1;
  for (std::size_t j = k + 1; j < table.columns(); ++j) {
    Weight score = 0;
    for (const auto& [row, w] : weight)
      if (table.available(row, j)) score += Weight(static_cast<long long>(per_row[row])) * w;
    if (score > best_score) {
      best_score = score;
      best = j;
    }
  }

  res.column = best;
  res.placed_weight = 0;
  for (const auto& f : fan) {
    if (best && weight.contains(f.row) && table.available(f.row, *best)) {
      res.placed.push_back({f.vertex, f.row, *best, weight[f.row]});
      res.placed_weight += weight[f.row];
    } else {
      res.discarded.push_back(f.vertex);
    }
  }
  return res;
}

void apply(WeightedTable& table, const FanResolution& resolution) {
  for (const auto& p : resolution.placed) table.put(p.row, p.column, {p.vertex, p.weight});
  if (resolution.blocked_row && !table.blocked(*resolution.blocked_row, *resolution.column))
    throw StrategyFailure("Rule 2 left its cell available");
}

bool row_within_harmonic_bound(const Weight& total, std::size_t c) {
  Weight harmonic = 0;
  for (std::size_t t = 1; t <= 3 * c; ++t) harmonic += ratio(1, t);
  return total <= Weight(static_cast<long long>(9 * c * c)) * harmonic;
}

bool row_below_log_bound(const Weight& total, std::size_t c) {
  const long double cc = static_cast<long double>(c);
  const long double bound = 9.0L * cc * cc * (1.0L + std::log(3.0L * cc));
  const long double value = total.convert_to<long double>();
  return value * (1.0L + 1e-12L) < bound * (1.0L - 1e-12L);
}

bool weight_census_holds(const WeightedTable& table, std::size_t row) {
  const std::size_t width = table.capacity();
  const auto weights = table.row_weights(row);
  for (std::size_t t = 1; t <= width; ++t) {
    const Weight threshold = ratio(width, t);
    const auto heavy = std::count_if(weights.begin(), weights.end(),
                                     [&](const Weight& w) { return w >= threshold; });
    if (static_cast<std::size_t>(heavy) > width * t) return false;
  }
  return true;
}

OddGirth7Presenter::OddGirth7Presenter(std::size_t target_colors)
    : c_(target_colors), fan_size_(fan_size(target_colors)), table_(target_colors) {
  for (const char* key :
       {"phases", "broken_phases", "fans", "interesting_fans", "blocked_cells", "anomalies",
        "placed_weight_violations", "edge_weight_violations", "row_weight_violations",
        "row_log_bound_violations", "census_violations", "group_violations", "exhausted"})
    counters_[key] = 0;
}

void OddGirth7Presenter::open_phase(std::size_t k) {
  phase_ = k;
  groups_ = split_groups(table_, k);
  next_group_ = 0;
  ++counters_["phases"];

  std::set<std::size_t> blocked_rows;
  if (k > 0)
    for (std::size_t row = 1; row <= c_; ++row)
      if (table_.blocked(row, k)) blocked_rows.insert(row);
  // Each group: exactly one vertex of every blocked color of column k.
  for (const auto& group : groups_) {
    std::multiset<std::size_t> rows;
    for (VertexId v : group) rows.insert(row_of_vertex_.at(v));
    if (!std::equal(rows.begin(), rows.end(), blocked_rows.begin(), blocked_rows.end()))
      ++counters_["group_violations"];
  }
  ledgers_.push_back({k, groups_.front().size(), 0, false});
}

std::string OddGirth7Presenter::annotation(const ActiveFan& fan, int rule, long column) const {
  return fmt::format("phase={} group={} fan={} rule={} col={}", *phase_, fan.group, fan.id, rule, column);
}

std::optional<Move> OddGirth7Presenter::next_move(const ColoredGraph& /*graph*/) {
  if (fan_) return Move{fan_->group_members, annotation(*fan_, 0, -1)};

  for (;;) {
    if (!phase_) {
      open_phase(0);
    } else if (next_group_ == groups_.size()) {
      if (*phase_ + 1 == table_.columns()) {
        counters_["exhausted"] = 1;
        return std::nullopt;
      }
      open_phase(*phase_ + 1);
    }
    if (rule1_broken(table_, *phase_)) {
      ledgers_.back().broken = true;
      ++counters_["broken_phases"];
      next_group_ = groups_.size();
      continue;
    }
    ActiveFan fan;
    fan.id = fans_started_++;
    fan.group = next_group_;
    fan.group_members = groups_[next_group_++];
    std::sort(fan.group_members.begin(), fan.group_members.end());
    fan_ = std::move(fan);
    ++ledgers_.back().fans;
    ++counters_["fans"];
    return Move{fan_->group_members, annotation(*fan_, 0, -1)};
  }
}

void OddGirth7Presenter::observe(VertexId vertex, Color color, const ColoredGraph& /*graph*/) {
  if (!fan_) throw StrategyFailure(fmt::format("vertex {} arrived outside a fan", vertex));
  auto [it, inserted] = row_of_color_.emplace(color, row_of_color_.size() + 1);
  if (it->second > c_)
    throw StrategyFailure(fmt::format("color {} would need row {} of a {}-row table", color, it->second, c_));
  fan_->vertices.push_back({vertex, it->second});
  if (fan_->vertices.size() == fan_size_) resolve_fan();
}

void OddGirth7Presenter::resolve_fan() {
  ActiveFan fan = std::move(*fan_);
  fan_.reset();
  const std::size_t k = *phase_;

  auto blocking = try_rule2(table_, fan.vertices, k);
  const FanResolution res = blocking ? std::move(*blocking) : rule3_interesting(table_, fan.vertices, k);
  apply(table_, res);

  const Weight fan_weight(static_cast<long long>(fan.vertices.size()));
  if (res.rule == 2) {
    ++counters_["blocked_cells"];
  } else {
    ++counters_["interesting_fans"];
    if (res.placed_weight < fan_weight) ++counters_["placed_weight_violations"];
    if (res.anomalies == 0 &&
        res.edge_weight != fan_weight * Weight(static_cast<long long>(table_.capacity())))
      ++counters_["edge_weight_violations"];
  }
  counters_["anomalies"] += static_cast<std::int64_t>(res.anomalies);

  std::set<std::size_t> touched;
  for (const auto& p : res.placed) {
    row_of_vertex_[p.vertex] = p.row;
    touched.insert(p.row);
    reannotations_.push_back({p.vertex, annotation(fan, res.rule, static_cast<long>(p.column))});
  }
  for (VertexId v : res.discarded) reannotations_.push_back({v, annotation(fan, res.rule, -1)});
  for (std::size_t row : touched) {
    const Weight total = table_.row_weight(row);
    if (!row_within_harmonic_bound(total, c_)) ++counters_["row_weight_violations"];
    if (!row_below_log_bound(total, c_)) ++counters_["row_log_bound_violations"];
    if (!weight_census_holds(table_, row)) ++counters_["census_violations"];
  }

  FanRecord record;
  record.id = fan.id;
  record.phase = k;
  record.group = fan.group;
  record.group_members = std::move(fan.group_members);
  for (const auto& f : fan.vertices) record.vertices.push_back(f.vertex);
  record.disposition = res.rule == 2 ? FanDisposition::Blocked : FanDisposition::Interesting;
  record.column = res.column;
  record.discarded = res.discarded.size();
  record.placed_weight = res.placed_weight;
  fans_.push_back(std::move(record));
}

std::vector<Reannotation> OddGirth7Presenter::take_reannotations() {
  return std::exchange(reannotations_, {});
}

StrategyStats OddGirth7Presenter::stats() const {
  auto out = counters_;
  out["truncated_fans"] = fan_ ? 1 : 0;
  out["broken_phase_violations"] = out["broken_phases"] > static_cast<std::int64_t>(c_) ? 1 : 0;
  out["blocked_cell_violations"] =
      out["blocked_cells"] > static_cast<std::int64_t>(3 * c_ * c_) ? 1 : 0;
  return out;
}

}  // namespace ogc::oddgirth7
