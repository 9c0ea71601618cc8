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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace ogc {

/// Vertex identifiers are handed out in arrival order, starting at 1.
using VertexId = std::uint32_t;

/// Colors are opaque positive integers. 0 is reserved for "not yet colored".
using Color = std::uint32_t;
inline constexpr Color kUncolored = 0;

class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Presenter asked for an edge to a vertex that does not exist.
class IllegalMove : public GameError {
 public:
  using GameError::GameError;
};

/// An Algorithm gave a vertex the color of one of its neighbors.
class ImproperColor : public GameError {
 public:
  using GameError::GameError;
};

/// Someone tried to recolor a vertex.
class IrrevocableColor : public GameError {
 public:
  using GameError::GameError;
};

class OddCycle : public GameError {
 public:
  using GameError::GameError;
};

/// A strategy reached a state its own bookkeeping says is impossible.
class StrategyFailure : public GameError {
 public:
  using GameError::GameError;
};

// Graph that only grows: vertices arrive with their full back-adjacency and
// are colored once. Neighbor lists stay sorted because every new vertex has
// the largest id so far.
class ColoredGraph {
 public:
  /// Adds vertex n+1 adjacent to `neighbors` (any order, no duplicates).
  /// Throws IllegalMove on unknown or repeated ids.
  VertexId add_vertex(std::span<const VertexId> neighbors);

  /// Throws ImproperColor if a colored neighbor already has `c`, and
  /// IrrevocableColor if `v` is already colored.
  void assign_color(VertexId v, Color c);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_; }
  bool contains(VertexId v) const { return v >= 1 && v <= adjacency_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  Color color(VertexId v) const;
  bool is_colored(VertexId v) const { return color(v) != kUncolored; }

  std::size_t distinct_colors() const { return color_use_.size(); }
  /// Largest color value assigned so far, 0 on an uncolored graph.
  Color max_color() const;
  /// Color value -> number of vertices carrying it.
  const std::map<Color, std::size_t>& color_histogram() const { return color_use_; }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Color> colors_;
  std::map<Color, std::size_t> color_use_;
  std::size_t edges_ = 0;
};

}  // namespace ogc
