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

// The on-line coloring game. Each round the Presenter names the earlier
// vertices the new vertex is adjacent to, the Algorithm colors it, and the
// color can never change afterwards.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogc/graph.hpp"
#include "ogc/transcript.hpp"

namespace ogc {

struct Move {
  std::vector<VertexId> neighbors;
  std::string annotation;
};

/// Late correction of a round's annotation, e.g. once a strategy knows where
/// a vertex ended up.
struct Reannotation {
  VertexId vertex = 0;
  std::string annotation;
};

using StrategyStats = std::map<std::string, std::int64_t>;

class Presenter {
 public:
  virtual ~Presenter() = default;

  virtual std::string name() const = 0;

  /// std::nullopt means the strategy has nothing left to present.
  virtual std::optional<Move> next_move(const ColoredGraph& graph) = 0;

  /// Called once the vertex returned by the last next_move() is colored.
  virtual void observe(VertexId vertex, Color color, const ColoredGraph& graph) = 0;

  virtual std::vector<Reannotation> take_reannotations() { return {}; }
  virtual StrategyStats stats() const { return {}; }
};

class Algorithm {
 public:
  virtual ~Algorithm() = default;
  virtual std::string name() const = 0;
  /// `vertex` is the newest vertex and the only uncolored one.
  virtual Color choose_color(const ColoredGraph& graph, VertexId vertex) = 0;
};

enum class StopReason { TargetReached, PresenterDone, RoundCap };

std::string_view to_string(StopReason reason);

struct GameOutcome {
  std::size_t vertices = 0;
  std::size_t distinct_colors = 0;
  StopReason stopped = StopReason::PresenterDone;
  StrategyStats stats;

  std::int64_t stat(const std::string& key) const {
    auto it = stats.find(key);
    return it == stats.end() ? 0 : it->second;
  }
};

struct PlayConfig {
  std::size_t target_colors = 1;
  std::size_t round_cap = 1'000'000;
  std::uint64_t seed = 0;  // recorded in the transcript header
};

struct PlayResult {
  GameOutcome outcome;
  Transcript transcript;
  ColoredGraph graph;
};

/// Runs rounds until the coloring uses `target_colors` distinct colors, the
/// Presenter is done, or `round_cap` vertices exist. Algorithm and Presenter
/// bugs surface as ImproperColor / IllegalMove naming the round.
PlayResult play(Presenter& presenter, Algorithm& algorithm, const PlayConfig& config);

/// Rebuilds the graph round by round, re-checking properness and that no
/// round follows the one reaching the target. RoundCap cannot be told apart
/// from PresenterDone after the fact; both replay as PresenterDone.
GameOutcome replay_verify(const Transcript& transcript);

/// Replays a transcript (optionally only its first `rounds` rounds) into a
/// graph without the stop-rule check.
ColoredGraph rebuild_graph(const Transcript& transcript,
                           std::size_t rounds = static_cast<std::size_t>(-1));

}  // namespace ogc
