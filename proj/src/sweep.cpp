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

#include "ogc/sweep.hpp"

#include <chrono>
#include <exception>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace ogc {

DuelReport run_duel(const DuelConfig& config) {
  DuelReport report;
  report.config = config;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto presenter = make_presenter(config.presenter, config.colors);
    auto algorithm = make_algorithm({config.algorithm, config.seed});
    PlayConfig play_config;
    play_config.target_colors = config.colors;
    play_config.round_cap =
        config.round_cap ? config.round_cap : default_round_cap(config.presenter, config.colors);
    play_config.seed = config.seed;
    report.result = play(*presenter, *algorithm, play_config);

    const auto& r = *report.result;
    report.target_reached = r.outcome.stopped == StopReason::TargetReached;
    report.bound_ok = within_size_bound(config.presenter, config.colors, r.outcome.vertices);
    report.failed_checks = failed_strategy_checks(r.outcome.stats);
    report.depth_used = config.depth.value_or(default_depth(r.graph.size()));
    report.class_report =
        check_class(r.transcript, r.graph, graph_class(config.presenter), report.depth_used);
  } catch (const std::exception& e) {
    report.error = e.what();
    report.class_report = {false, std::nullopt, "not checked"};
  }
  if (config.timing) {
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

SweepRecord to_record(const DuelReport& report) {
  SweepRecord rec;
  rec.presenter = std::string(to_string(report.config.presenter));
  rec.algorithm = std::string(to_string(report.config.algorithm));
  rec.c = report.config.colors;
  rec.seed = report.config.seed;
  if (report.result) {
    const auto& o = report.result->outcome;
    rec.n_vertices = o.vertices;
    rec.colors_used = o.distinct_colors;
    rec.phases = o.stat("phases");
    rec.broken_phases = o.stat("broken_phases");
    rec.interesting_fans = o.stat("interesting_fans");
  }
  rec.class_ok = report.class_report.ok;
  rec.bound_ok = report.bound_ok;
  rec.elapsed_ms = report.elapsed_ms;
  rec.ok = report.ok();
  if (!report.error.empty()) {
    rec.failure = report.error;
  } else if (!report.target_reached) {
    rec.failure = "target not reached";
  } else if (!report.failed_checks.empty()) {
    rec.failure = fmt::format("strategy checks failed: {}", fmt::join(report.failed_checks, ","));
  } else if (!report.class_report.ok) {
    rec.failure = report.class_report.detail;
  } else if (!report.bound_ok) {
    rec.failure = "size bound exceeded";
  }
  return rec;
}

std::vector<DuelConfig> expand(const SweepSpec& spec) {
  std::vector<DuelConfig> out;
  for (auto p : spec.presenters)
    for (auto a : spec.algorithms)
      for (auto c : spec.colors)
        for (auto s : spec.seeds)
          out.push_back({p, a, c, s, spec.round_cap, spec.depth, spec.timing});
  return out;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  const auto configs = expand(spec);
  std::vector<SweepRecord> records(configs.size());
  const auto n = static_cast<std::ptrdiff_t>(configs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) records[i] = to_record(run_duel(configs[i]));
  return records;
}

std::vector<SweepRecord> run_sweep_serial(const SweepSpec& spec) {
  std::vector<SweepRecord> records;
  for (const auto& config : expand(spec)) records.push_back(to_record(run_duel(config)));
  return records;
}

std::string csv_header() {
  return "presenter,algorithm,c,seed,n_vertices,colors_used,phases,broken_phases,interesting_fans,"
         "class_ok,bound_ok,elapsed_ms";
}

std::string format_csv_row(const SweepRecord& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{:.3f}", r.presenter, r.algorithm, r.c, r.seed,
                     r.n_vertices, r.colors_used, r.phases, r.broken_phases, r.interesting_fans,
                     r.class_ok ? 1 : 0, r.bound_ok ? 1 : 0, r.elapsed_ms);
}

std::string format_csv(const std::vector<SweepRecord>& records) {
  std::string out = csv_header() + "\n";
  for (const auto& r : records) out += format_csv_row(r) + "\n";
  return out;
}

}  // namespace ogc
