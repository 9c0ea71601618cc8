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

#include "ogc/triangle_free_presenter.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace ogc::trianglefree {

ShiftTable::ShiftTable(std::size_t c) : c_(c), cells_(c * c, 0), filled_(c, 0) {}

CellPos ShiftTable::place(VertexId v, std::size_t row) {
  if (row < 1 || row > c_) throw StrategyFailure(fmt::format("row {} outside 1..{}", row, c_));
  if (filled_[row - 1] == c_)
    throw StrategyFailure(fmt::format("row {} is full, cannot place vertex {}", row, v));
  const std::size_t column = c_ - filled_[row - 1]++;
  cells_[(row - 1) * c_ + (column - 1)] = v;
  return {row, column};
}

VertexId ShiftTable::at(std::size_t row, std::size_t column) const {
  if (row < 1 || row > c_ || column < 1 || column > c_) return 0;
  return cells_[(row - 1) * c_ + (column - 1)];
}

std::vector<std::pair<std::size_t, VertexId>> ShiftTable::column(std::size_t column) const {
  std::vector<std::pair<std::size_t, VertexId>> out;
  for (std::size_t row = 1; row <= c_; ++row)
    if (VertexId v = at(row, column)) out.emplace_back(row, v);
  return out;
}

bool phase_should_end(const ShiftTable& table, std::size_t k, const std::set<std::size_t>& current_rows) {
  for (auto [row, v] : table.column(k + 1))
    if (!current_rows.contains(row)) return true;
  return false;
}

TriangleFreePresenter::TriangleFreePresenter(std::size_t target_colors)
    : c_(target_colors), table_(target_colors) {
  counters_["phases"] = 0;
  counters_["skipped_phases"] = 0;
  counters_["current_set_violations"] = 0;
}

void TriangleFreePresenter::start_phase(std::size_t k) {
  phase_ = k;
  phase_started_ = true;
  presented_in_phase_ = false;
  current_.clear();
  current_rows_.clear();
  for (auto [row, v] : table_.column(k)) {
    current_.push_back(v);
    current_rows_.insert(row);
  }
  std::sort(current_.begin(), current_.end());
  // I_k grows by at least one vertex per phase.
  if (current_.size() < k) ++counters_["current_set_violations"];
  ++counters_["phases"];
}

std::optional<Move> TriangleFreePresenter::next_move(const ColoredGraph& /*graph*/) {
  if (!phase_started_) start_phase(0);
  while (phase_should_end(table_, phase_, current_rows_)) {
    if (!presented_in_phase_) ++counters_["skipped_phases"];
    if (phase_ + 1 >= c_) return std::nullopt;
    start_phase(phase_ + 1);
  }
  presented_in_phase_ = true;
  return Move{current_, fmt::format("phase={} |I_k|={}", phase_, current_.size())};
}

void TriangleFreePresenter::observe(VertexId vertex, Color color, const ColoredGraph& /*graph*/) {
  auto [it, inserted] = row_of_color_.emplace(color, row_of_color_.size() + 1);
  if (it->second > c_)
    throw StrategyFailure(fmt::format("color {} would need row {} of a {}-row table", color,
                                      it->second, c_));
  placements_.emplace_back(vertex, table_.place(vertex, it->second));
}

StrategyStats TriangleFreePresenter::stats() const {
  auto out = counters_;
  out["final_phase"] = static_cast<std::int64_t>(phase_);
  return out;
}

}  // namespace ogc::trianglefree
