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

#include "ogc/verify.hpp"

#include <charconv>
#include <vector>

#include <fmt/format.h>

namespace ogc {

namespace {

constexpr std::size_t kSpotSources = 64;

std::optional<long> column_of(std::string_view annotation) {
  for (std::size_t pos = 0; pos < annotation.size();) {
    const auto end = std::min(annotation.find(' ', pos), annotation.size());
    const auto token = annotation.substr(pos, end - pos);
    if (token.starts_with("col=")) {
      long value = 0;
      const auto digits = token.substr(4);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
      return value;
    }
    pos = end + 1;
  }
  return std::nullopt;
}

ClassReport fail(std::string detail) { return {false, std::nullopt, std::move(detail)}; }

}  // namespace

std::string_view to_string(VerifyDepth depth) {
  switch (depth) {
    case VerifyDepth::Structural: return "structural";
    case VerifyDepth::FullOddGirth: return "full-odd-girth";
    case VerifyDepth::Oracle: return "oracle";
  }
  return "unknown";
}

std::optional<VerifyDepth> parse_verify_depth(std::string_view name) {
  for (auto d : {VerifyDepth::Structural, VerifyDepth::FullOddGirth, VerifyDepth::Oracle})
    if (to_string(d) == name) return d;
  return std::nullopt;
}

VerifyDepth default_depth(std::size_t vertices) {
  return vertices <= kFullOddGirthLimit ? VerifyDepth::FullOddGirth : VerifyDepth::Structural;
}

bool column_structure_ok(const Transcript& transcript, const ColoredGraph& graph, std::string* why) {
  auto report = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (transcript.rounds.size() != graph.size()) return report("transcript and graph sizes differ");
  std::vector<long> column(graph.size() + 1, -1);
  for (const auto& r : transcript.rounds) {
    const auto col = column_of(r.annotation);
    if (!col) return report(fmt::format("round {}: no col= annotation", r.index));
    column[r.index] = *col;
  }
  for (VertexId v = 1; v <= graph.size(); ++v) {
    std::optional<long> shared;
    for (VertexId u : graph.neighbors(v)) {
      if (u > v) {
        if (column[u] >= 0 && column[u] == column[v])
          return report(fmt::format("edge {}-{} inside column {}", v, u, column[v]));
        continue;
      }
      if (column[u] < 0) return report(fmt::format("vertex {} is adjacent to discarded vertex {}", v, u));
      if (shared && *shared != column[u])
        return report(fmt::format("vertex {} has neighbors in columns {} and {}", v, *shared, column[u]));
      shared = column[u];
    }
    if (shared && column[v] >= 0 && column[v] <= *shared)
      return report(fmt::format("vertex {} in column {} is not right of its neighbors' column {}", v,
                                column[v], *shared));
  }
  return true;
}

ClassReport check_class(const Transcript& transcript, const ColoredGraph& graph, GraphClass cls,
                        VerifyDepth depth) {
  if (!is_properly_colored(graph)) return fail("coloring is not proper");

  if (depth == VerifyDepth::Structural) {
    switch (cls) {
      case GraphClass::Bipartite:
        if (!is_bipartite(graph)) return fail("graph is not bipartite");
        return {true, OddGirth::infinite(), "bipartite (2-coloring found)"};
      case GraphClass::TriangleFree:
        if (has_odd_cycle_up_to(graph, 3)) return fail("graph contains a triangle");
        return {true, std::nullopt, "no triangle"};
      case GraphClass::OddGirth7: {
        std::string why;
        if (!column_structure_ok(transcript, graph, &why)) return fail("column structure: " + why);
        if (has_odd_cycle_up_to(graph, 3)) return fail("graph contains a triangle");
        std::vector<VertexId> sources;
        const std::size_t step = std::max<std::size_t>(1, graph.size() / kSpotSources);
        for (std::size_t v = 1; v <= graph.size() && sources.size() < kSpotSources; v += step)
          sources.push_back(static_cast<VertexId>(v));
        const auto sampled = odd_girth_from_sources(graph, sources);
        if (!sampled.at_least(7))
          return fail(fmt::format("spot check found an odd cycle of length {}", sampled.to_string()));
        return {true, std::nullopt,
                fmt::format("columns independent, neighborhoods in one column, spot odd-girth {}",
                            sampled.to_string())};
      }
    }
  }

  const auto girth = odd_girth(graph);
  const std::size_t need = min_odd_girth(cls);
  const bool girth_ok = need == 0 ? girth.is_infinite() : girth.at_least(need);
  if (!girth_ok)
    return {false, girth, fmt::format("odd-girth {} violates {}", girth.to_string(), to_string(cls))};

  if (depth == VerifyDepth::Oracle && graph.size() <= kChromaticOracleLimit) {
    const std::size_t chi = chromatic_number(graph);
    if (graph.distinct_colors() < chi)
      return {false, girth, fmt::format("{} colors used but chromatic number is {}", graph.distinct_colors(), chi)};
    return {true, girth, fmt::format("odd-girth {}, chromatic number {}", girth.to_string(), chi)};
  }
  return {true, girth, fmt::format("odd-girth {}", girth.to_string())};
}

}  // namespace ogc
