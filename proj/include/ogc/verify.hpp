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

// Class membership checks that read nothing but a transcript and the graph
// rebuilt from it.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ogc/oracles.hpp"
#include "ogc/registry.hpp"
#include "ogc/transcript.hpp"

namespace ogc {

enum class VerifyDepth {
  Structural,    // linear-ish checks; odd-girth-7 also reads col= annotations
  FullOddGirth,  // exact odd-girth over all sources
  Oracle,        // FullOddGirth plus exact chromatic number on small graphs
};

std::string_view to_string(VerifyDepth depth);
std::optional<VerifyDepth> parse_verify_depth(std::string_view name);

/// FullOddGirth up to kFullOddGirthLimit vertices, Structural above.
inline constexpr std::size_t kFullOddGirthLimit = 10'000;
VerifyDepth default_depth(std::size_t vertices);

struct ClassReport {
  bool ok = true;
  std::optional<OddGirth> girth;  // set when computed exactly
  std::string detail;             // first failure, or a short summary
};

ClassReport check_class(const Transcript& transcript, const ColoredGraph& graph, GraphClass cls,
                        VerifyDepth depth);

/// Reads `col=<j>` from each round's annotation (-1 = not in the table) and
/// checks that every neighborhood sits inside one column strictly left of the
/// vertex, and that no edge joins two vertices of one column.
bool column_structure_ok(const Transcript& transcript, const ColoredGraph& graph, std::string* why);

}  // namespace ogc
