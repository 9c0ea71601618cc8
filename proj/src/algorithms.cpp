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

#include "ogc/algorithms.hpp"

#include <algorithm>
#include <vector>

#include "ogc/oracles.hpp"

namespace ogc {

namespace {

// Smallest positive integer missing from `colors` (consumed).
Color least_absent(std::vector<Color>& colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  Color candidate = 1;
  for (Color c : colors) {
    if (c == candidate) ++candidate;
    else if (c > candidate) break;
  }
  return candidate;
}

std::vector<Color> neighbor_colors(const ColoredGraph& g, VertexId v) {
  std::vector<Color> colors;
  colors.reserve(g.degree(v));
  for (VertexId u : g.neighbors(v))
    if (g.is_colored(u)) colors.push_back(g.color(u));
  return colors;
}

class FirstFit final : public Algorithm {
 public:
  std::string name() const override { return "first-fit"; }
  Color choose_color(const ColoredGraph& g, VertexId v) override { return first_fit(g, v); }
};

class Cbip final : public Algorithm {
 public:
  std::string name() const override { return "cbip"; }
  Color choose_color(const ColoredGraph& g, VertexId v) override { return cbip(g, v); }
};

class RandomAdmissible final : public Algorithm {
 public:
  explicit RandomAdmissible(std::uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "random"; }
  Color choose_color(const ColoredGraph& g, VertexId v) override {
    return random_admissible(g, v, seed_);
  }

 private:
  std::uint64_t seed_;
};

class FreshColor final : public Algorithm {
 public:
  std::string name() const override { return "fresh"; }
  Color choose_color(const ColoredGraph& g, VertexId v) override { return fresh_color(g, v); }
};

}  // namespace

Color first_fit(const ColoredGraph& g, VertexId v) {
  auto colors = neighbor_colors(g, v);
  return least_absent(colors);
}

Color cbip(const ColoredGraph& g, VertexId v) {
  const auto parts = bipartition_of_component(g, v);
  std::vector<Color> opposite;
  opposite.reserve(parts.other_side.size());
  for (VertexId u : parts.other_side)
    if (g.is_colored(u)) opposite.push_back(g.color(u));
  return least_absent(opposite);
}

Color random_admissible(const ColoredGraph& g, VertexId v, std::uint64_t seed) {
  auto taken = neighbor_colors(g, v);
  std::sort(taken.begin(), taken.end());
  std::vector<Color> candidates;
  for (Color c = 1; c <= g.max_color() + 1; ++c)
    if (!std::binary_search(taken.begin(), taken.end(), c)) candidates.push_back(c);
  SplitMix64 stream(SplitMix64::mix(seed + SplitMix64::kGamma * v));
  return candidates[stream.below(candidates.size())];
}

Color fresh_color(const ColoredGraph& g, VertexId /*v*/) { return g.max_color() + 1; }

std::string_view to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::FirstFit: return "first-fit";
    case AlgorithmKind::Cbip: return "cbip";
    case AlgorithmKind::RandomAdmissible: return "random";
    case AlgorithmKind::FreshColor: return "fresh";
  }
  return "unknown";
}

std::optional<AlgorithmKind> parse_algorithm_kind(std::string_view name) {
  for (auto kind : {AlgorithmKind::FirstFit, AlgorithmKind::Cbip, AlgorithmKind::RandomAdmissible,
                    AlgorithmKind::FreshColor})
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

std::unique_ptr<Algorithm> make_algorithm(const AlgorithmSpec& spec) {
  switch (spec.kind) {
    case AlgorithmKind::FirstFit: return std::make_unique<FirstFit>();
    case AlgorithmKind::Cbip: return std::make_unique<Cbip>();
    case AlgorithmKind::RandomAdmissible: return std::make_unique<RandomAdmissible>(spec.seed);
    case AlgorithmKind::FreshColor: return std::make_unique<FreshColor>();
  }
  return nullptr;
}

}  // namespace ogc
