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

#include "ogc/graph.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace ogc {

VertexId ColoredGraph::add_vertex(std::span<const VertexId> neighbors) {
  std::vector<VertexId> sorted(neighbors.begin(), neighbors.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!contains(sorted[i]))
      throw IllegalMove(fmt::format("neighbor {} does not exist (graph has {} vertices)",
                                    sorted[i], size()));
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw IllegalMove(fmt::format("neighbor {} listed twice", sorted[i]));
  }

  const auto id = static_cast<VertexId>(adjacency_.size() + 1);
  for (VertexId u : sorted) adjacency_[u - 1].push_back(id);
  edges_ += sorted.size();
  adjacency_.push_back(std::move(sorted));
  colors_.push_back(kUncolored);
  return id;
}

void ColoredGraph::assign_color(VertexId v, Color c) {
  if (!contains(v)) throw IllegalMove(fmt::format("vertex {} does not exist", v));
  if (c == kUncolored) throw ImproperColor(fmt::format("vertex {}: color must be positive", v));
  if (colors_[v - 1] != kUncolored)
    throw IrrevocableColor(fmt::format("vertex {} already has color {}", v, colors_[v - 1]));
  for (VertexId u : adjacency_[v - 1]) {
    if (colors_[u - 1] == c)
      throw ImproperColor(fmt::format("vertex {} and its neighbor {} both get color {}", v, u, c));
  }
  colors_[v - 1] = c;
  ++color_use_[c];
}

std::span<const VertexId> ColoredGraph::neighbors(VertexId v) const {
  if (!contains(v)) throw IllegalMove(fmt::format("vertex {} does not exist", v));
  return adjacency_[v - 1];
}

bool ColoredGraph::adjacent(VertexId u, VertexId v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

Color ColoredGraph::color(VertexId v) const {
  if (!contains(v)) throw IllegalMove(fmt::format("vertex {} does not exist", v));
  return colors_[v - 1];
}

Color ColoredGraph::max_color() const {
  return color_use_.empty() ? kUncolored : color_use_.rbegin()->first;
}

}  // namespace ogc
