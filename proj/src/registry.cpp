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

#include "ogc/registry.hpp"

#include <cmath>

#include "ogc/bipartite_presenter.hpp"
#include "ogc/odd_girth7_presenter.hpp"
#include "ogc/triangle_free_presenter.hpp"

namespace ogc {

std::string_view to_string(PresenterKind kind) {
  switch (kind) {
    case PresenterKind::Bipartite: return "bipartite";
    case PresenterKind::TriangleFree: return "triangle-free";
    case PresenterKind::OddGirth7: return "odd-girth-7";
  }
  return "unknown";
}

std::string_view to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::Bipartite: return "bipartite";
    case GraphClass::TriangleFree: return "triangle-free";
    case GraphClass::OddGirth7: return "odd-girth-7";
  }
  return "unknown";
}

std::optional<PresenterKind> parse_presenter_kind(std::string_view name) {
  for (auto kind : {PresenterKind::Bipartite, PresenterKind::TriangleFree, PresenterKind::OddGirth7})
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
  for (auto cls : {GraphClass::Bipartite, GraphClass::TriangleFree, GraphClass::OddGirth7})
    if (to_string(cls) == name) return cls;
  return std::nullopt;
}

GraphClass graph_class(PresenterKind kind) {
  switch (kind) {
    case PresenterKind::Bipartite: return GraphClass::Bipartite;
    case PresenterKind::TriangleFree: return GraphClass::TriangleFree;
    case PresenterKind::OddGirth7: return GraphClass::OddGirth7;
  }
  return GraphClass::Bipartite;
}

std::size_t min_odd_girth(GraphClass cls) {
  switch (cls) {
    case GraphClass::Bipartite: return 0;
    case GraphClass::TriangleFree: return 5;
    case GraphClass::OddGirth7: return 7;
  }
  return 0;
}

std::unique_ptr<Presenter> make_presenter(PresenterKind kind, std::size_t target_colors) {
  switch (kind) {
    case PresenterKind::Bipartite:
      return std::make_unique<bipartite::BipartitePresenter>(target_colors);
    case PresenterKind::TriangleFree:
      return std::make_unique<trianglefree::TriangleFreePresenter>(target_colors);
    case PresenterKind::OddGirth7:
      return std::make_unique<oddgirth7::OddGirth7Presenter>(target_colors);
  }
  return nullptr;
}

double size_bound(PresenterKind kind, std::size_t c) {
  const double x = static_cast<double>(c);
  switch (kind) {
    case PresenterKind::Bipartite: return (8.0 + 7.0 * std::sqrt(2.0)) * std::exp2(x / 2.0);
    case PresenterKind::TriangleFree: return x * x;
    case PresenterKind::OddGirth7:
      return static_cast<double>(9 * c * c * oddgirth7::fan_size(c));
  }
  return 0.0;
}

bool within_size_bound(PresenterKind kind, std::size_t c, std::size_t n) {
  switch (kind) {
    case PresenterKind::TriangleFree: return n <= c * c;
    // 27 c^3 (1 + ceil(ln 3c)) = 3c phases * 3c fans * fan size.
    case PresenterKind::OddGirth7: return n <= 9 * c * c * oddgirth7::fan_size(c);
    case PresenterKind::Bipartite:
      // Irrational bound, so equality cannot occur.
      return static_cast<long double>(n) <=
             (8.0L + 7.0L * std::sqrt(2.0L)) * std::exp2(static_cast<long double>(c) / 2.0L);
  }
  return false;
}

std::size_t default_round_cap(PresenterKind kind, std::size_t c) {
  return static_cast<std::size_t>(std::ceil(10.0 * size_bound(kind, c)));
}

std::vector<std::string> failed_strategy_checks(const StrategyStats& stats) {
  std::vector<std::string> failed;
  for (const auto& [key, value] : stats) {
    if (value == 0) continue;
    const bool check = key.ends_with("_violations") || key.ends_with("_mismatches") ||
                       key == "anomalies" || key == "exhausted";
    if (check) failed.push_back(key);
  }
  return failed;
}

}  // namespace ogc
