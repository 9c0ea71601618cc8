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

#include "ogc/transcript.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace ogc {

namespace {

constexpr std::string_view kMagic = "ogc-transcript v1";

template <typename Int>
bool parse_int(std::string_view text, Int& out) {
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Consumes "key=value" up to the next space (or end) from `rest`.
std::string_view take_field(std::string_view& rest, std::string_view key, std::size_t line) {
  if (!rest.starts_with(key) || rest.size() <= key.size() || rest[key.size()] != '=')
    throw TranscriptParseError(line, fmt::format("expected field '{}='", key));
  rest.remove_prefix(key.size() + 1);
  const auto space = rest.find(' ');
  const auto value = rest.substr(0, space);
  rest = space == std::string_view::npos ? std::string_view{} : rest.substr(space + 1);
  if (value.empty()) throw TranscriptParseError(line, fmt::format("field '{}' is empty", key));
  return value;
}

TranscriptHeader parse_header(std::string_view text, std::size_t line) {
  if (!text.starts_with(kMagic) || text.size() <= kMagic.size() || text[kMagic.size()] != ' ')
    throw TranscriptParseError(line, "missing 'ogc-transcript v1' header");
  std::string_view rest = text.substr(kMagic.size() + 1);
  TranscriptHeader header;
  header.presenter = std::string(take_field(rest, "presenter", line));
  header.algorithm = std::string(take_field(rest, "algorithm", line));
  if (!parse_int(take_field(rest, "c", line), header.target) || header.target == 0)
    throw TranscriptParseError(line, "c must be a positive integer");
  if (!parse_int(take_field(rest, "seed", line), header.seed))
    throw TranscriptParseError(line, "seed must be an unsigned 64-bit integer");
  if (!rest.empty()) throw TranscriptParseError(line, "trailing text after seed");
  return header;
}

TranscriptRound parse_round(std::string_view text, std::size_t line) {
  std::string_view fields[3];
  std::string_view rest = text;
  for (auto& field : fields) {
    const auto semi = rest.find(';');
    if (semi == std::string_view::npos)
      throw TranscriptParseError(line, "expected '<round>;<neighbors>;<color>;<annotation>'");
    field = rest.substr(0, semi);
    rest.remove_prefix(semi + 1);
  }
  TranscriptRound round;
  if (!parse_int(fields[0], round.index))
    throw TranscriptParseError(line, fmt::format("bad round index '{}'", fields[0]));
  std::string_view ids = fields[1];
  while (!ids.empty()) {
    const auto comma = ids.find(',');
    VertexId id = 0;
    if (!parse_int(ids.substr(0, comma), id) || id == 0)
      throw TranscriptParseError(line, fmt::format("bad neighbor id '{}'", ids.substr(0, comma)));
    if (!round.neighbors.empty() && id <= round.neighbors.back())
      throw TranscriptParseError(line, "neighbor ids must be strictly increasing");
    round.neighbors.push_back(id);
    if (comma == std::string_view::npos) break;
    ids.remove_prefix(comma + 1);
    if (ids.empty()) throw TranscriptParseError(line, "trailing comma in neighbor list");
  }
  if (!parse_int(fields[2], round.color) || round.color == kUncolored)
    throw TranscriptParseError(line, fmt::format("bad color '{}'", fields[2]));
  round.annotation = std::string(rest);
  return round;
}

}  // namespace

TranscriptParseError::TranscriptParseError(std::size_t line, const std::string& what)
    : GameError(fmt::format("transcript line {}: {}", line, what)), line_(line) {}

void write_transcript(std::ostream& out, const Transcript& t) {
  out << format_transcript(t);
}

std::string format_transcript(const Transcript& t) {
  std::string text = fmt::format("{} presenter={} algorithm={} c={} seed={}\n", kMagic,
                                 t.header.presenter, t.header.algorithm, t.header.target,
                                 t.header.seed);
  for (const auto& r : t.rounds) {
    fmt::format_to(std::back_inserter(text), "{};{};{};{}\n", r.index,
                   fmt::join(r.neighbors, ","), r.color, r.annotation);
  }
  return text;
}

Transcript parse_transcript(std::string_view text) {
  Transcript t;
  std::size_t line_no = 0;
  bool have_header = false;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!have_header) {
      t.header = parse_header(line, line_no);
      have_header = true;
      continue;
    }
    t.rounds.push_back(parse_round(line, line_no));
  }
  if (!have_header) throw TranscriptParseError(1, "empty input, header expected");
  return t;
}

Transcript read_transcript_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open transcript '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_transcript(buffer.str());
}

}  // namespace ogc
