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

// Verification oracles over a ColoredGraph. None of these look at strategy
// state; they only read vertices, edges and colors.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ogc/graph.hpp"

namespace ogc {

struct Bipartition {
  std::vector<VertexId> own_side;    // contains the queried vertex
  std::vector<VertexId> other_side;
};

/// Sides of the connected component containing `v`, each sorted.
/// Throws OddCycle when the component is not bipartite.
Bipartition bipartition_of_component(const ColoredGraph& g, VertexId v);

bool is_bipartite(const ColoredGraph& g);

/// Every edge joins two distinct colors and every vertex is colored.
bool is_properly_colored(const ColoredGraph& g);

class OddGirth {
 public:
  static OddGirth infinite() { return OddGirth(0); }
  static OddGirth of(std::size_t length) { return OddGirth(length); }

  bool is_infinite() const { return length_ == 0; }
  /// Only meaningful when finite.
  std::size_t value() const { return length_; }
  /// True when there is no odd cycle shorter than `bound`.
  bool at_least(std::size_t bound) const { return is_infinite() || length_ >= bound; }
  std::string to_string() const;

  friend bool operator==(OddGirth, OddGirth) = default;

 private:
  explicit OddGirth(std::size_t length) : length_(length) {}
  std::size_t length_;
};

// Shortest odd cycle. A breadth-first layering from source s that finds an
// edge inside layer d witnesses a closed odd walk of length 2d+1, hence an
// odd cycle no longer than that; a source on a shortest odd cycle attains
// it exactly, so the minimum over all sources is the odd-girth.
//
// odd_girth() spreads sources over OpenMP threads and prunes layers that
// cannot beat the best cycle seen so far. odd_girth_serial() is the plain
// reference used by the tests and the benchmark.
OddGirth odd_girth(const ColoredGraph& g);
OddGirth odd_girth_serial(const ColoredGraph& g);

/// Same layering restricted to the given sources: an upper bound on the
/// odd-girth (INFINITE if none of the sources sees an odd cycle).
OddGirth odd_girth_from_sources(const ColoredGraph& g, std::span<const VertexId> sources);

/// Whether some odd cycle of length <= max_length exists. Explores only
/// (max_length-1)/2 layers per source, so short-cycle checks stay cheap on
/// large graphs.
bool has_odd_cycle_up_to(const ColoredGraph& g, std::size_t max_length);
bool has_odd_cycle_up_to_serial(const ColoredGraph& g, std::size_t max_length);

/// Exact chromatic number by backtracking. Refuses graphs above
/// kChromaticOracleLimit vertices with std::length_error.
inline constexpr std::size_t kChromaticOracleLimit = 20;
std::size_t chromatic_number(const ColoredGraph& g);

}  // namespace ogc
