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

// Line-oriented ASCII record of a game:
//
//   ogc-transcript v1 presenter=<name> algorithm=<name> c=<int> seed=<uint64>
//   <round>;<comma-separated neighbor ids>;<color>;<annotation>
//   ...
//
// Every line, including the last, ends in '\n'. The annotation is the rest
// of the line after the third ';'.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ogc/graph.hpp"

namespace ogc {

class TranscriptParseError : public GameError {
 public:
  TranscriptParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct TranscriptHeader {
  std::string presenter;
  std::string algorithm;
  std::size_t target = 1;
  std::uint64_t seed = 0;

  friend bool operator==(const TranscriptHeader&, const TranscriptHeader&) = default;
};

struct TranscriptRound {
  std::size_t index = 0;
  std::vector<VertexId> neighbors;  // ascending
  Color color = kUncolored;
  std::string annotation;

  friend bool operator==(const TranscriptRound&, const TranscriptRound&) = default;
};

struct Transcript {
  TranscriptHeader header;
  std::vector<TranscriptRound> rounds;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

std::string format_transcript(const Transcript& t);
void write_transcript(std::ostream& out, const Transcript& t);

/// Throws TranscriptParseError carrying the 1-based line number.
Transcript parse_transcript(std::string_view text);
Transcript read_transcript_file(const std::string& path);

}  // namespace ogc
