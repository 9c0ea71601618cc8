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


// ogc: play, sweep, verify and replay on-line coloring games.
//
// Exit codes: 0 all checks pass, 1 usage, 2 unknown strategy or class,
// 3 I/O failure, 4 a game, parse or verification check failed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "ogc/engine.hpp"
#include "ogc/registry.hpp"
#include "ogc/sweep.hpp"
#include "ogc/transcript.hpp"
#include "ogc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitResolve = 2;
constexpr int kExitIo = 3;
constexpr int kExitCheck = 4;

struct ResolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "4", "2..16", "1,3,5" or a mix such as "1..3,8".
std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, comma - pos);
    const auto dots = item.find("..");
    try {
      std::size_t used = 0;
      if (dots == std::string::npos) {
        out.push_back(std::stoull(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } else {
        const auto lo = std::stoull(item.substr(0, dots));
        const auto hi_text = item.substr(dots + 2);
        const auto hi = std::stoull(hi_text, &used);
        if (used != hi_text.size() || hi < lo) throw std::invalid_argument(item);
        for (auto v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw ResolveError(fmt::format("bad number or range '{}'", item));
    }
    pos = comma + 1;
  }
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    out.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

std::vector<ogc::PresenterKind> resolve_presenters(const std::string& text) {
  if (text == "all")
    return {ogc::PresenterKind::Bipartite, ogc::PresenterKind::TriangleFree, ogc::PresenterKind::OddGirth7};
  std::vector<ogc::PresenterKind> out;
  for (const auto& name : split(text)) {
    auto kind = ogc::parse_presenter_kind(name);
    if (!kind) throw ResolveError(fmt::format("unknown presenter '{}'", name));
    out.push_back(*kind);
  }
  return out;
}

std::vector<ogc::AlgorithmKind> resolve_algorithms(const std::string& text) {
  if (text == "all")
    return {ogc::AlgorithmKind::FirstFit, ogc::AlgorithmKind::Cbip, ogc::AlgorithmKind::RandomAdmissible,
            ogc::AlgorithmKind::FreshColor};
  std::vector<ogc::AlgorithmKind> out;
  for (const auto& name : split(text)) {
    auto kind = ogc::parse_algorithm_kind(name);
    if (!kind) throw ResolveError(fmt::format("unknown algorithm '{}'", name));
    out.push_back(*kind);
  }
  return out;
}

std::optional<ogc::VerifyDepth> resolve_depth(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  auto depth = ogc::parse_verify_depth(text);
  if (!depth) throw ResolveError(fmt::format("unknown verify depth '{}'", text));
  return depth;
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path));
  out << text;
  if (!out) throw IoError(fmt::format("write to '{}' failed", path));
}

struct Options {
  std::string presenter = "bipartite";
  std::string algorithm = "first-fit";
  std::string colors = "4";
  std::string seed = "0";
  std::size_t round_cap = 0;
  std::string out;
  std::string depth = "auto";
  std::string cls;
  std::string transcript;
  bool timing = false;
  bool serial = false;
};

int cmd_duel(const Options& o) {
  const auto presenters = resolve_presenters(o.presenter);
  const auto algorithms = resolve_algorithms(o.algorithm);
  const auto colors = parse_list(o.colors);
  const auto seeds = parse_list(o.seed);
  if (presenters.size() != 1 || algorithms.size() != 1 || colors.size() != 1 || seeds.size() != 1)
    throw ResolveError("duel takes exactly one presenter, algorithm, c and seed");

  ogc::DuelConfig config{presenters[0], algorithms[0], colors[0], seeds[0], o.round_cap,
                         resolve_depth(o.depth), o.timing};
  const auto report = ogc::run_duel(config);
  if (report.result && !o.out.empty()) write_file(o.out, ogc::format_transcript(report.result->transcript));

  const auto rec = ogc::to_record(report);
  std::cout << fmt::format(
      "presenter={} algorithm={} c={} seed={} n={} colors={} stop={} bound_ok={} class_ok={} depth={} ({})\n",
      rec.presenter, rec.algorithm, rec.c, rec.seed, rec.n_vertices, rec.colors_used,
      report.result ? ogc::to_string(report.result->outcome.stopped) : "error", rec.bound_ok ? 1 : 0,
      rec.class_ok ? 1 : 0, ogc::to_string(report.depth_used), report.class_report.detail);
  if (!report.ok()) {
    std::cerr << "FAILED: " << rec.failure << "\n";
    return kExitCheck;
  }
  return kExitOk;
}

int cmd_sweep(const Options& o) {
  ogc::SweepSpec spec;
  spec.presenters = resolve_presenters(o.presenter);
  spec.algorithms = resolve_algorithms(o.algorithm);
  for (auto c : parse_list(o.colors)) spec.colors.push_back(static_cast<std::size_t>(c));
  spec.seeds = parse_list(o.seed);
  spec.round_cap = o.round_cap;
  spec.depth = resolve_depth(o.depth);
  spec.timing = o.timing;

  const auto records = o.serial ? ogc::run_sweep_serial(spec) : ogc::run_sweep(spec);
  write_file(o.out, ogc::format_csv(records));
  int failed = 0;
  for (const auto& r : records) {
    if (r.ok) continue;
    ++failed;
    std::cerr << fmt::format("FAILED {} {} c={} seed={}: {}\n", r.presenter, r.algorithm, r.c, r.seed, r.failure);
  }
  std::cerr << fmt::format("{} rows, {} failed\n", records.size(), failed);
  return failed ? kExitCheck : kExitOk;
}

ogc::Transcript load(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw IoError(fmt::format("cannot open '{}'", path));
  return ogc::read_transcript_file(path);
}

int cmd_verify(const Options& o) {
  const auto transcript = load(o.transcript);
  std::optional<ogc::GraphClass> cls;
  if (!o.cls.empty()) {
    cls = ogc::parse_graph_class(o.cls);
    if (!cls) throw ResolveError(fmt::format("unknown class '{}'", o.cls));
  } else if (auto kind = ogc::parse_presenter_kind(transcript.header.presenter)) {
    cls = ogc::graph_class(*kind);
  } else {
    throw ResolveError("no --class given and the header names no known presenter");
  }
  const auto outcome = ogc::replay_verify(transcript);
  const auto graph = ogc::rebuild_graph(transcript);
  const auto depth = resolve_depth(o.depth).value_or(ogc::default_depth(graph.size()));
  const auto report = ogc::check_class(transcript, graph, *cls, depth);
  std::cout << fmt::format("n={} colors={} stop={} class={} depth={} odd_girth={} {}: {}\n", outcome.vertices,
                           outcome.distinct_colors, ogc::to_string(outcome.stopped), ogc::to_string(*cls),
                           ogc::to_string(depth), report.girth ? report.girth->to_string() : "-",
                           report.ok ? "pass" : "FAIL", report.detail);
  return report.ok ? kExitOk : kExitCheck;
}

int cmd_replay(const Options& o) {
  const auto transcript = load(o.transcript);
  const auto outcome = ogc::replay_verify(transcript);
  std::cout << fmt::format("presenter={} algorithm={} c={} seed={} n={} colors={} stop={}\n",
                           transcript.header.presenter, transcript.header.algorithm, transcript.header.target,
                           transcript.header.seed, outcome.vertices, outcome.distinct_colors,
                           ogc::to_string(outcome.stopped));
  if (!o.out.empty()) write_file(o.out, ogc::format_transcript(transcript));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"On-line coloring games: adversary strategies, algorithms and verification"};
  app.require_subcommand(1);
  Options o;

  auto add_game_flags = [&](CLI::App* sub, bool many) {
    sub->add_option("--presenter", o.presenter,
                    many ? "Presenters, comma separated, or 'all'" : "bipartite, triangle-free or odd-girth-7");
    sub->add_option("--algorithm", o.algorithm,
                    many ? "Algorithms, comma separated, or 'all'" : "first-fit, cbip, random or fresh");
    sub->add_option("-c,--colors", o.colors, many ? "Targets: 4, 2..16 or 1,3,5" : "Target number of colors");
    sub->add_option("--seed", o.seed, many ? "Seeds: 0, 0..4 or 1,7" : "Seed (random algorithm)");
    sub->add_option("--round-cap", o.round_cap, "Stop after this many vertices (0: ten times the size bound)");
    sub->add_option("--verify-depth", o.depth, "auto, structural, full-odd-girth or oracle");
    sub->add_flag("--timing", o.timing, "Measure elapsed_ms (off: 0.000, byte-stable output)");
  };

  auto* duel = app.add_subcommand("duel", "Play one game, verify it, optionally write the transcript");
  add_game_flags(duel, false);
  duel->add_option("--out", o.out, "Transcript output path");

  auto* sweep = app.add_subcommand("sweep", "Play every combination and write CSV");
  add_game_flags(sweep, true);
  sweep->add_option("--out", o.out, "CSV output path (default stdout)");
  sweep->add_flag("--serial", o.serial, "Run games one after another");

  auto* verify = app.add_subcommand("verify", "Replay a transcript and check class membership");
  verify->add_option("transcript", o.transcript, "Transcript path")->required();
  verify->add_option("--class", o.cls, "bipartite, triangle-free or odd-girth-7 (default: from header)");
  verify->add_option("--verify-depth", o.depth, "auto, structural, full-odd-girth or oracle");

  auto* replay = app.add_subcommand("replay", "Replay a transcript and print its outcome");
  replay->add_option("transcript", o.transcript, "Transcript path")->required();
  replay->add_option("--out", o.out, "Write the normalized transcript here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*duel) return cmd_duel(o);
    if (*sweep) return cmd_sweep(o);
    if (*verify) return cmd_verify(o);
    if (*replay) return cmd_replay(o);
  } catch (const ResolveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResolve;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheck;
  }
  return kExitOk;
}
