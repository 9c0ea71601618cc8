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

#include "ogc/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ogc {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kNoCycle = std::numeric_limits<std::size_t>::max();

// Per-thread scratch for the layered searches. `dist` is reset through
// `queue` so that a search costs O(visited), not O(n).
struct Layering {
  explicit Layering(std::size_t n) : dist(n + 1, kUnseen) { queue.reserve(n); }

  // Length of the shortest closed odd walk through `source` whose deepest
  // layer is at most `max_depth`, or kNoCycle.
  std::size_t shortest_odd_walk(const ColoredGraph& g, VertexId source, std::size_t max_depth) {
    std::size_t found = kNoCycle;
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size() && found == kNoCycle; ++head) {
      const VertexId u = queue[head];
      const std::uint32_t d = dist[u];
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          if (d + 1 <= max_depth) {
            dist[w] = d + 1;
            queue.push_back(w);
          }
        } else if (dist[w] == d) {
          found = 2 * static_cast<std::size_t>(d) + 1;
          break;
        }
      }
    }
    for (VertexId v : queue) dist[v] = kUnseen;
    return found;
  }

  std::vector<std::uint32_t> dist;
  std::vector<VertexId> queue;
};

OddGirth to_girth(std::size_t walk) {
  return walk == kNoCycle ? OddGirth::infinite() : OddGirth::of(walk);
}

}  // namespace

std::string OddGirth::to_string() const {
  return is_infinite() ? std::string("INFINITE") : std::to_string(length_);
}

Bipartition bipartition_of_component(const ColoredGraph& g, VertexId v) {
  if (!g.contains(v)) throw IllegalMove(fmt::format("vertex {} does not exist", v));
  std::vector<std::int8_t> side(g.size() + 1, -1);
  std::vector<VertexId> queue{v};
  side[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (side[w] < 0) {
        side[w] = static_cast<std::int8_t>(1 - side[u]);
        queue.push_back(w);
      } else if (side[w] == side[u]) {
        throw OddCycle(fmt::format("component of vertex {} has an odd cycle through edge {}-{}",
                                   v, u, w));
      }
    }
  }
  Bipartition parts;
  std::sort(queue.begin(), queue.end());
  for (VertexId u : queue) (side[u] == 0 ? parts.own_side : parts.other_side).push_back(u);
  return parts;
}

bool is_bipartite(const ColoredGraph& g) {
  std::vector<bool> seen(g.size() + 1, false);
  for (VertexId v = 1; v <= g.size(); ++v) {
    if (seen[v]) continue;
    try {
      const auto parts = bipartition_of_component(g, v);
      for (VertexId u : parts.own_side) seen[u] = true;
      for (VertexId u : parts.other_side) seen[u] = true;
    } catch (const OddCycle&) {
      return false;
    }
  }
  return true;
}

bool is_properly_colored(const ColoredGraph& g) {
  for (VertexId v = 1; v <= g.size(); ++v) {
    if (!g.is_colored(v)) return false;
    for (VertexId u : g.neighbors(v))
      if (g.color(u) == g.color(v)) return false;
  }
  return true;
}

OddGirth odd_girth_serial(const ColoredGraph& g) {
  Layering layering(g.size());
  std::size_t best = kNoCycle;
  for (VertexId s = 1; s <= g.size(); ++s)
    best = std::min(best, layering.shortest_odd_walk(g, s, kNoCycle));
  return to_girth(best);
}

OddGirth odd_girth(const ColoredGraph& g) {
  const auto n = static_cast<std::int64_t>(g.size());
  std::size_t best = kNoCycle;
#pragma omp parallel
  {
    Layering layering(g.size());
#pragma omp for schedule(dynamic, 32)
    for (std::int64_t s = 1; s <= n; ++s) {
      std::size_t current;
#pragma omp atomic read
      current = best;
      if (current <= 3) continue;
      // Only layers that could produce a strictly shorter cycle.
      const std::size_t depth = current == kNoCycle ? kNoCycle : (current - 3) / 2;
      const std::size_t walk = layering.shortest_odd_walk(g, static_cast<VertexId>(s), depth);
      if (walk < current) {
#pragma omp critical(ogc_odd_girth)
        best = std::min(best, walk);
      }
    }
  }
  return to_girth(best);
}

OddGirth odd_girth_from_sources(const ColoredGraph& g, std::span<const VertexId> sources) {
  Layering layering(g.size());
  std::size_t best = kNoCycle;
  for (VertexId s : sources) {
    if (!g.contains(s)) throw IllegalMove(fmt::format("vertex {} does not exist", s));
    best = std::min(best, layering.shortest_odd_walk(g, s, kNoCycle));
  }
  return to_girth(best);
}

bool has_odd_cycle_up_to_serial(const ColoredGraph& g, std::size_t max_length) {
  if (max_length < 3) return false;
  const std::size_t depth = (max_length - 1) / 2;
  Layering layering(g.size());
  for (VertexId s = 1; s <= g.size(); ++s)
    if (layering.shortest_odd_walk(g, s, depth) != kNoCycle) return true;
  return false;
}

bool has_odd_cycle_up_to(const ColoredGraph& g, std::size_t max_length) {
  if (max_length < 3) return false;
  const std::size_t depth = (max_length - 1) / 2;
  const auto n = static_cast<std::int64_t>(g.size());
  bool found = false;
#pragma omp parallel
  {
    Layering layering(g.size());
#pragma omp for schedule(dynamic, 64) reduction(|| : found)
    for (std::int64_t s = 1; s <= n; ++s) {
      if (found) continue;
      found = layering.shortest_odd_walk(g, static_cast<VertexId>(s), depth) != kNoCycle;
    }
  }
  return found;
}

namespace {

// k-colorability by backtracking over a fixed vertex order. A vertex may
// only open the next unused color, which removes color-permutation symmetry.
class Colorability {
 public:
  explicit Colorability(const ColoredGraph& g) : n_(g.size()), adjacency_(n_, 0) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return g.degree(static_cast<VertexId>(a + 1)) > g.degree(static_cast<VertexId>(b + 1));
    });
    for (std::size_t v = 0; v < n_; ++v)
      for (VertexId u : g.neighbors(static_cast<VertexId>(v + 1)))
        adjacency_[v] |= std::uint32_t{1} << (u - 1);
  }

  bool colorable(std::size_t k) {
    k_ = k;
    class_mask_.assign(k, 0);
    return place(0, 0);
  }

 private:
  bool place(std::size_t index, std::size_t used) {
    if (index == n_) return true;
    const std::size_t v = order_[index];
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (class_mask_[c] & adjacency_[v]) continue;
      class_mask_[c] |= std::uint32_t{1} << v;
      if (place(index + 1, std::max(used, c + 1))) return true;
      class_mask_[c] &= ~(std::uint32_t{1} << v);
    }
    return false;
  }

  std::size_t n_;
  std::size_t k_ = 0;
  std::vector<std::uint32_t> adjacency_;
  std::vector<std::size_t> order_;
  std::vector<std::uint32_t> class_mask_;
};

}  // namespace

std::size_t chromatic_number(const ColoredGraph& g) {
  if (g.size() > kChromaticOracleLimit)
    throw std::length_error(fmt::format("chromatic oracle is limited to {} vertices, got {}",
                                        kChromaticOracleLimit, g.size()));
  if (g.size() == 0) return 0;
  Colorability search(g);
  std::size_t k = 1;
  while (!search.colorable(k)) ++k;
  return k;
}

}  // namespace ogc
