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

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "ogc/engine.hpp"

namespace ogc {

/// Least positive integer not used by a neighbor of `v`.
Color first_fit(const ColoredGraph& g, VertexId v);

/// Least positive integer absent from the side of v's component opposite
/// to v. Throws OddCycle when that component is not bipartite.
Color cbip(const ColoredGraph& g, VertexId v);

/// Uniform over {1, ..., max_color + 1} minus the neighbors' colors. The
/// draw depends only on (seed, v), through SplitMix64.
Color random_admissible(const ColoredGraph& g, VertexId v, std::uint64_t seed);

/// max_color + 1.
Color fresh_color(const ColoredGraph& g, VertexId v);

// SplitMix64 (Steele, Lea, Flood). Fixed here so transcripts of the random
// opponent replay bit-for-bit on every platform.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return mix(state_ += kGamma); }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

enum class AlgorithmKind { FirstFit, Cbip, RandomAdmissible, FreshColor };

struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::FirstFit;
  std::uint64_t seed = 0;  // RandomAdmissible only
};

std::string_view to_string(AlgorithmKind kind);
/// "first-fit", "cbip", "random", "fresh".
std::optional<AlgorithmKind> parse_algorithm_kind(std::string_view name);

std::unique_ptr<Algorithm> make_algorithm(const AlgorithmSpec& spec);

}  // namespace ogc
