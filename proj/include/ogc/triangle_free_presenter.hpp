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

// Presenter for triangle-free graphs that forces c colors within c^2
// vertices, using a c x c table (one vertex per cell, row = color, rows fill
// from column c leftwards). Phase k presents vertices adjacent to exactly
// the vertices that sat in column k when the phase began, and ends once
// column k+1 holds a vertex whose color does not occur on that set.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "ogc/engine.hpp"

namespace ogc::trianglefree {

struct CellPos {
  std::size_t row = 0;     // 1..c
  std::size_t column = 0;  // 1..c

  friend bool operator==(CellPos, CellPos) = default;
};

class ShiftTable {
 public:
  explicit ShiftTable(std::size_t c);

  std::size_t size() const { return c_; }

  /// Stores `v` in the rightmost empty cell of `row`. Throws StrategyFailure
  /// if the row is full.
  CellPos place(VertexId v, std::size_t row);

  /// 0 when the cell is empty.
  VertexId at(std::size_t row, std::size_t column) const;

  /// Occupied cells of a column, as (row, vertex), by increasing row.
  std::vector<std::pair<std::size_t, VertexId>> column(std::size_t column) const;

 private:
  std::size_t c_;
  std::vector<VertexId> cells_;       // row-major, (row-1)*c + (column-1)
  std::vector<std::size_t> filled_;   // per row
};

/// True iff column k+1 holds a vertex whose row is not in `current_rows`
/// (the rows of the set the phase presents against).
bool phase_should_end(const ShiftTable& table, std::size_t k, const std::set<std::size_t>& current_rows);

class TriangleFreePresenter final : public Presenter {
 public:
  explicit TriangleFreePresenter(std::size_t target_colors);

  std::string name() const override { return "triangle-free"; }
  std::optional<Move> next_move(const ColoredGraph& graph) override;
  void observe(VertexId vertex, Color color, const ColoredGraph& graph) override;
  StrategyStats stats() const override;

  const ShiftTable& table() const { return table_; }
  /// Table position of every observed vertex, in arrival order.
  std::span<const std::pair<VertexId, CellPos>> placements() const { return placements_; }

 private:
  void start_phase(std::size_t k);

  std::size_t c_;
  ShiftTable table_;
  std::map<Color, std::size_t> row_of_color_;  // first appearance order
  std::size_t phase_ = 0;
  bool phase_started_ = false;
  bool presented_in_phase_ = false;
  std::vector<VertexId> current_;         // I_k, ascending
  std::set<std::size_t> current_rows_;
  std::vector<std::pair<VertexId, CellPos>> placements_;
  StrategyStats counters_;
};

}  // namespace ogc::trianglefree
