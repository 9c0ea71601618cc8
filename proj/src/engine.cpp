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

#include "ogc/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace ogc {

namespace {

// Re-raise graph errors with the round they happened in.
template <typename Fn>
auto at_round(std::size_t round, Fn&& fn) {
  try {
    return fn();
  } catch (const IllegalMove& e) {
    throw IllegalMove(fmt::format("round {}: {}", round, e.what()));
  } catch (const ImproperColor& e) {
    throw ImproperColor(fmt::format("round {}: {}", round, e.what()));
  } catch (const IrrevocableColor& e) {
    throw IrrevocableColor(fmt::format("round {}: {}", round, e.what()));
  } catch (const OddCycle& e) {
    throw OddCycle(fmt::format("round {}: {}", round, e.what()));
  } catch (const StrategyFailure& e) {
    throw StrategyFailure(fmt::format("round {}: {}", round, e.what()));
  }
}

}  // namespace

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::TargetReached: return "target-reached";
    case StopReason::PresenterDone: return "presenter-done";
    case StopReason::RoundCap: return "round-cap";
  }
  return "unknown";
}

PlayResult play(Presenter& presenter, Algorithm& algorithm, const PlayConfig& config) {
  if (config.target_colors == 0) throw std::invalid_argument("target color count must be >= 1");
  if (config.round_cap == 0) throw std::invalid_argument("round cap must be >= 1");

  PlayResult result;
  auto& g = result.graph;
  auto& t = result.transcript;
  t.header = {presenter.name(), algorithm.name(), config.target_colors, config.seed};

  auto& reason = result.outcome.stopped;
  for (;;) {
    if (g.size() >= config.round_cap) {
      reason = StopReason::RoundCap;
      break;
    }
    const std::size_t round = g.size() + 1;
    auto move = at_round(round, [&] { return presenter.next_move(g); });
    if (!move) {
      reason = StopReason::PresenterDone;
      break;
    }
    const VertexId v = at_round(round, [&] { return g.add_vertex(move->neighbors); });
    const Color c = at_round(round, [&] { return algorithm.choose_color(g, v); });
    at_round(round, [&] { g.assign_color(v, c); });

    std::vector<VertexId> neighbors(g.neighbors(v).begin(), g.neighbors(v).end());
    t.rounds.push_back({round, std::move(neighbors), c, std::move(move->annotation)});

    at_round(round, [&] { presenter.observe(v, c, g); });
    for (auto& fix : presenter.take_reannotations()) {
      if (fix.vertex == 0 || fix.vertex > t.rounds.size())
        throw IllegalMove(fmt::format("round {}: reannotation of unknown vertex {}", round, fix.vertex));
      t.rounds[fix.vertex - 1].annotation = std::move(fix.annotation);
    }

    if (g.distinct_colors() == config.target_colors) {
      reason = StopReason::TargetReached;
      break;
    }
  }

  result.outcome.vertices = g.size();
  result.outcome.distinct_colors = g.distinct_colors();
  result.outcome.stats = presenter.stats();
  return result;
}

ColoredGraph rebuild_graph(const Transcript& transcript, std::size_t rounds) {
  ColoredGraph g;
  const std::size_t count = std::min(rounds, transcript.rounds.size());
  for (std::size_t i = 0; i < count; ++i) {
    const auto& r = transcript.rounds[i];
    at_round(r.index, [&] {
      const VertexId v = g.add_vertex(r.neighbors);
      g.assign_color(v, r.color);
    });
  }
  return g;
}

GameOutcome replay_verify(const Transcript& transcript) {
  ColoredGraph g;
  const std::size_t target = transcript.header.target;
  for (std::size_t i = 0; i < transcript.rounds.size(); ++i) {
    const auto& r = transcript.rounds[i];
    if (r.index != i + 1)
      throw IllegalMove(fmt::format("round {} recorded where round {} was expected", r.index, i + 1));
    if (g.distinct_colors() >= target)
      throw IllegalMove(fmt::format("round {}: game continued after reaching {} colors", r.index, target));
    at_round(r.index, [&] {
      const VertexId v = g.add_vertex(r.neighbors);
      g.assign_color(v, r.color);
    });
  }
  GameOutcome outcome;
  outcome.vertices = g.size();
  outcome.distinct_colors = g.distinct_colors();
  outcome.stopped = g.distinct_colors() == target ? StopReason::TargetReached : StopReason::PresenterDone;
  return outcome;
}

}  // namespace ogc
