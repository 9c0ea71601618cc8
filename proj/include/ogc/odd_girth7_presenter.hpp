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

// Presenter for graphs without C3 and C5 that forces c colors within
// 27 c^3 (1 + ceil(ln 3c)) vertices.
//
// State is a table with rows 1..c (one per color) and columns 0..3c-1. A
// cell holds at most 3c vertices; a full cell is "blocked", otherwise its
// color is "available" for that column. The game runs in phases k = 0..3c-1.
// Phase k splits the blocked cells of column k into 3c groups (one vertex
// of every blocked color each; all empty when k = 0 or nothing is blocked)
// and, for every group R:
//
//   Rule 1  if some color is available at column k but blocked in every
//           column right of k, the phase ends ("broken").
//   fan     otherwise present an independent set F of 3c(1 + ceil(ln 3c))
//           new vertices adjacent to exactly R.
//   Rule 2  if a cell (i, j), j > k, holding m < 3c vertices can be filled
//           by color-i vertices of F, put 3c - m of them there with weight
//           0. The cell is now blocked.
//   Rule 3  otherwise ("interesting fan") give each color-i vertex of F the
//           weight 3c / t_i, where t_i counts the columns right of k still
//           available for color i, pick the column j > k with the largest
//           total weight of F-vertices whose color is available there, and
//           put those vertices into column j.
//
// Fan vertices that are not put into the table are discarded and never
// become neighbors again. Every neighborhood therefore lies in one column,
// and every vertex lands strictly right of its neighbors' column.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ogc/engine.hpp"

namespace ogc::oddgirth7 {

using Weight = boost::multiprecision::cpp_rational;

struct TableEntry {
  VertexId vertex = 0;
  Weight weight;
};

class WeightedTable {
 public:
  explicit WeightedTable(std::size_t c);

  std::size_t rows() const { return c_; }
  std::size_t columns() const { return 3 * c_; }
  std::size_t capacity() const { return 3 * c_; }

  /// row in 1..rows(), column in 0..columns()-1.
  std::span<const TableEntry> cell(std::size_t row, std::size_t column) const;
  bool available(std::size_t row, std::size_t column) const;
  bool blocked(std::size_t row, std::size_t column) const { return !available(row, column); }

  /// Columns strictly right of `column` that are available for `row`.
  std::size_t available_right_of(std::size_t row, std::size_t column) const;

  /// Throws StrategyFailure when the cell is already full.
  void put(std::size_t row, std::size_t column, TableEntry entry);

  Weight row_weight(std::size_t row) const;
  std::vector<Weight> row_weights(std::size_t row) const;

 private:
  std::size_t index(std::size_t row, std::size_t column) const;

  std::size_t c_;
  std::vector<std::vector<TableEntry>> cells_;
};

/// 3c (1 + ceil(ln 3c)).
std::size_t fan_size(std::size_t c);

/// 3c groups for phase k, each holding the g-th vertex of every blocked
/// cell of column k (in row order).
std::vector<std::vector<VertexId>> split_groups(const WeightedTable& table, std::size_t k);

bool rule1_broken(const WeightedTable& table, std::size_t k);

struct FanVertex {
  VertexId vertex = 0;
  std::size_t row = 0;
};

struct Placement {
  VertexId vertex = 0;
  std::size_t row = 0;
  std::size_t column = 0;
  Weight weight;
};

struct FanResolution {
  int rule = 0;  // 2 or 3
  std::optional<std::size_t> column;
  std::optional<std::size_t> blocked_row;  // Rule 2 only
  std::vector<Placement> placed;
  std::vector<VertexId> discarded;
  Weight placed_weight;
  // Rule 3: sum over fan vertices of t_i * 3c / t_i. Equals |F| * 3c unless
  // some fan color has no available column to the right.
  Weight edge_weight;
  std::size_t anomalies = 0;  // fan vertices whose color has t_i = 0
};

/// Lexicographically least eligible cell (row, then column); the earliest
/// presented vertices of that color fill it.
std::optional<FanResolution> try_rule2(const WeightedTable& table, std::span<const FanVertex> fan,
                                       std::size_t k);

/// Column choice ties go to the smallest column.
FanResolution rule3_interesting(const WeightedTable& table, std::span<const FanVertex> fan,
                                std::size_t k);

void apply(WeightedTable& table, const FanResolution& resolution);

/// Row total <= 9c^2 * H(3c), exactly.
bool row_within_harmonic_bound(const Weight& total, std::size_t c);
/// Row total < 9c^2 (1 + ln 3c). Conservative: may only fail spuriously
/// within a relative 1e-12 of the bound.
bool row_below_log_bound(const Weight& total, std::size_t c);
/// For t = 1..3c, at most 3c*t vertices of the row have weight >= 3c/t.
bool weight_census_holds(const WeightedTable& table, std::size_t row);

enum class FanDisposition { Blocked, Interesting };

struct FanRecord {
  std::size_t id = 0;
  std::size_t phase = 0;
  std::size_t group = 0;
  std::vector<VertexId> group_members;
  std::vector<VertexId> vertices;
  FanDisposition disposition = FanDisposition::Blocked;
  std::optional<std::size_t> column;
  std::size_t discarded = 0;
  Weight placed_weight;
};

struct PhaseLedger {
  std::size_t phase = 0;
  std::size_t group_size = 0;  // vertices per group (= blocked cells in column k)
  std::size_t fans = 0;
  bool broken = false;
};

class OddGirth7Presenter final : public Presenter {
 public:
  explicit OddGirth7Presenter(std::size_t target_colors);

  std::string name() const override { return "odd-girth-7"; }
  std::optional<Move> next_move(const ColoredGraph& graph) override;
  void observe(VertexId vertex, Color color, const ColoredGraph& graph) override;
  std::vector<Reannotation> take_reannotations() override;
  StrategyStats stats() const override;

  const WeightedTable& table() const { return table_; }
  std::span<const FanRecord> fans() const { return fans_; }
  std::span<const PhaseLedger> phases() const { return ledgers_; }

 private:
  struct ActiveFan {
    std::size_t id = 0;
    std::size_t group = 0;
    std::vector<VertexId> group_members;  // ascending
    std::vector<FanVertex> vertices;
  };

  void open_phase(std::size_t k);
  void resolve_fan();
  std::string annotation(const ActiveFan& fan, int rule, long column) const;

  std::size_t c_;
  std::size_t fan_size_;
  WeightedTable table_;
  std::map<Color, std::size_t> row_of_color_;
  std::map<VertexId, std::size_t> row_of_vertex_;  // vertices in the table
  std::optional<std::size_t> phase_;
  std::vector<std::vector<VertexId>> groups_;
  std::size_t next_group_ = 0;
  std::optional<ActiveFan> fan_;
  std::size_t fans_started_ = 0;
  std::vector<FanRecord> fans_;
  std::vector<PhaseLedger> ledgers_;
  std::vector<Reannotation> reannotations_;
  StrategyStats counters_;
};

}  // namespace ogc::oddgirth7
