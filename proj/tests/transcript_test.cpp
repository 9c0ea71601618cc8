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


#include <gtest/gtest.h>

#include <string>

#include "ogc/transcript.hpp"

namespace ogc {
namespace {

const std::string kSample =
    "ogc-transcript v1 presenter=triangle-free algorithm=first-fit c=3 seed=0\n"
    "1;;1;phase=0 |I_k|=0\n"
    "2;;1;phase=0 |I_k|=0\n"
    "3;;1;phase=0 |I_k|=0\n"
    "4;3;2;phase=1 |I_k|=1\n"
    "5;3;2;phase=1 |I_k|=1\n"
    "6;2,5;3;phase=2 |I_k|=2\n";

TEST(Transcript, RoundTripsByteExactly) {
  const auto t = parse_transcript(kSample);
  EXPECT_EQ(t.header.presenter, "triangle-free");
  EXPECT_EQ(t.header.algorithm, "first-fit");
  EXPECT_EQ(t.header.target, 3u);
  EXPECT_EQ(t.header.seed, 0u);
  ASSERT_EQ(t.rounds.size(), 6u);
  EXPECT_EQ(t.rounds[5].neighbors, (std::vector<VertexId>{2, 5}));
  EXPECT_EQ(t.rounds[5].color, 3u);
  EXPECT_EQ(t.rounds[5].annotation, "phase=2 |I_k|=2");
  EXPECT_EQ(format_transcript(t), kSample);
}

TEST(Transcript, AnnotationMayContainSeparators) {
  Transcript t;
  t.header = {"p", "a", 2, 18446744073709551615ULL};
  t.rounds.push_back({1, {}, 1, "x;y=z;"});
  t.rounds.push_back({2, {1}, 2, ""});
  const auto text = format_transcript(t);
  EXPECT_EQ(parse_transcript(text), t);
}

TEST(Transcript, AcceptsCrlf) {
  std::string crlf;
  for (char ch : kSample) {
    if (ch == '\n') crlf += '\r';
    crlf += ch;
  }
  EXPECT_EQ(parse_transcript(crlf), parse_transcript(kSample));
}

TEST(Transcript, RejectsMalformedInput) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_transcript(text);
    } catch (const TranscriptParseError& e) {
      return e.line();
    }
    return 0;
  };
  const std::string header = "ogc-transcript v1 presenter=p algorithm=a c=2 seed=0\n";
  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("ogc-transcript v2 presenter=p algorithm=a c=2 seed=0\n"), 1u);
  EXPECT_EQ(line_of("ogc-transcript v1 presenter=p algorithm=a c=0 seed=0\n"), 1u);
  EXPECT_EQ(line_of(header + "1;;1\n"), 2u);
  EXPECT_EQ(line_of(header + "1;;x;\n"), 2u);
  EXPECT_EQ(line_of(header + "1;;1;\n2;1,1;2;\n"), 3u);
  EXPECT_EQ(line_of(header + "1;;1;\n2;1,;2;\n"), 3u);
  EXPECT_EQ(line_of(header + "1;;1;\n"), 0u);
}

}  // namespace
}  // namespace ogc
