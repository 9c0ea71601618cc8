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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ogc/algorithms.hpp"
#include "ogc/engine.hpp"
#include "ogc/registry.hpp"
#include "ogc/verify.hpp"

namespace ogc {

struct DuelConfig {
  PresenterKind presenter = PresenterKind::Bipartite;
  AlgorithmKind algorithm = AlgorithmKind::FirstFit;
  std::size_t colors = 2;
  std::uint64_t seed = 0;
  std::size_t round_cap = 0;               // 0: default_round_cap()
  std::optional<VerifyDepth> depth;        // unset: default_depth(n)
  bool timing = false;                     // elapsed_ms stays 0 when off
};

struct DuelReport {
  DuelConfig config;
  std::optional<PlayResult> result;  // empty if the game threw
  std::string error;
  ClassReport class_report;
  VerifyDepth depth_used = VerifyDepth::Structural;
  bool bound_ok = false;
  bool target_reached = false;
  std::vector<std::string> failed_checks;
  double elapsed_ms = 0.0;

  bool ok() const {
    return error.empty() && class_report.ok && bound_ok && target_reached && failed_checks.empty();
  }
};

DuelReport run_duel(const DuelConfig& config);

struct SweepSpec {
  std::vector<PresenterKind> presenters;
  std::vector<AlgorithmKind> algorithms;
  std::vector<std::size_t> colors;
  std::vector<std::uint64_t> seeds{0};
  std::size_t round_cap = 0;
  std::optional<VerifyDepth> depth;
  bool timing = false;
};

struct SweepRecord {
  std::string presenter;
  std::string algorithm;
  std::size_t c = 0;
  std::uint64_t seed = 0;
  std::size_t n_vertices = 0;
  std::size_t colors_used = 0;
  std::int64_t phases = 0;
  std::int64_t broken_phases = 0;
  std::int64_t interesting_fans = 0;
  bool class_ok = false;
  bool bound_ok = false;
  double elapsed_ms = 0.0;
  bool ok = false;        // not a CSV column: every check passed
  std::string failure;    // not a CSV column
};

SweepRecord to_record(const DuelReport& report);

/// Cartesian product in presenter, algorithm, c, seed order.
std::vector<DuelConfig> expand(const SweepSpec& spec);

/// Games run concurrently; rows come back in expand() order.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);
std::vector<SweepRecord> run_sweep_serial(const SweepSpec& spec);

std::string csv_header();
std::string format_csv_row(const SweepRecord& record);
std::string format_csv(const std::vector<SweepRecord>& records);

}  // namespace ogc
