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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ogc/engine.hpp"

namespace ogc {

enum class PresenterKind { Bipartite, TriangleFree, OddGirth7 };

/// Graph class a presenter promises to stay inside.
enum class GraphClass { Bipartite, TriangleFree, OddGirth7 };

std::string_view to_string(PresenterKind kind);
std::string_view to_string(GraphClass cls);
/// "bipartite", "triangle-free", "odd-girth-7".
std::optional<PresenterKind> parse_presenter_kind(std::string_view name);
std::optional<GraphClass> parse_graph_class(std::string_view name);

GraphClass graph_class(PresenterKind kind);
/// Smallest odd-girth allowed in the class (0 for bipartite: no odd cycle).
std::size_t min_odd_girth(GraphClass cls);

std::unique_ptr<Presenter> make_presenter(PresenterKind kind, std::size_t target_colors);

/// Largest number of vertices the strategy may need to force c colors:
///   bipartite      (8 + 7 sqrt 2) 2^(c/2)
///   triangle-free  c^2
///   odd-girth-7    27 c^3 (1 + ceil(ln 3c))
double size_bound(PresenterKind kind, std::size_t c);
bool within_size_bound(PresenterKind kind, std::size_t c, std::size_t n);

/// Ten times size_bound, rounded up.
std::size_t default_round_cap(PresenterKind kind, std::size_t c);

/// Names of strategy self-checks that failed (counters ending in
/// "_violations", "_mismatches", plus "anomalies" and "exhausted").
std::vector<std::string> failed_strategy_checks(const StrategyStats& stats);

}  // namespace ogc
