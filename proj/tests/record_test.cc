// Copyright 2026 The normkit Authors.
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

#include "normkit/record.h"

#include <gtest/gtest.h>

#include <sstream>

#include "normkit/error.h"

namespace normkit {
namespace {

TEST(Record, JsonlRoundTrip) {
  std::vector<Record> records = {
      {"15 de janeiro de 2021", "15/01/2021", "pt-complete-01", Language::kPt,
       Task::kDateComplete, false},
      {"Rua \"X\", 1", "Rua X, 1, B, C, SP", "addr-01", Language::kPt,
       Task::kAddress, true},
  };
  std::stringstream s;
  WriteJsonl(s, records);
  EXPECT_EQ(ReadJsonl(s), records);
}

TEST(Record, JsonlFieldOrder) {
  Record r{"a", "b", "f", Language::kEn, Task::kDateRelative, false};
  EXPECT_EQ(RecordToJsonLine(r),
            R"({"input":"a","target":"b","format_id":"f","language":"en","task":"date_relative","noised":false})");
}

TEST(Record, MalformedLineReportsLineNumber) {
  std::stringstream s(
      "{\"input\":\"a\",\"target\":\"b\",\"format_id\":\"f\",\"language\":"
      "\"pt\",\"task\":\"address\",\"noised\":false}\n{oops\n");
  try {
    ReadJsonl(s);
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Record, CsvQuotesFields) {
  std::stringstream s;
  WriteCsv(s, {{"Rua A, 1", "x", "f", Language::kPt, Task::kAddress, false}});
  std::string text = s.str();
  EXPECT_NE(text.find("\"Rua A, 1\""), std::string::npos);
}

TEST(Manifest, RoundTrip) {
  SplitManifest m;
  m.train_formats = {"a", "b"};
  m.test_formats = {"c"};
  m.seed = 7;
  m.kind = "complete";
  m.language = "pt";
  m.year_min = 1921;
  m.year_max = 2120;
  m.noise_level = 0.3;
  m.generator = {{"command", "gen dates"}};
  SplitManifest back = ManifestFromJson(ManifestToJson(m));
  EXPECT_EQ(back.train_formats, m.train_formats);
  EXPECT_EQ(back.test_formats, m.test_formats);
  EXPECT_EQ(back.year_min, 1921);
  EXPECT_EQ(back.noise_level, 0.3);
  EXPECT_TRUE(back.IsTestFormat("c"));
  EXPECT_FALSE(back.IsTestFormat("a"));
  EXPECT_EQ(ManifestToJson(m)["tool_version"], std::string(kToolVersion));
}

TEST(Grammar, CanonicalShapes) {
  EXPECT_TRUE(MatchesCompleteDate("01/01/2000"));
  EXPECT_FALSE(MatchesCompleteDate("1/01/2000"));
  EXPECT_FALSE(MatchesCompleteDate("31/02/2000"));
  EXPECT_TRUE(MatchesDayMonth("29/02"));
  EXPECT_FALSE(MatchesDayMonth("30/02"));
  EXPECT_TRUE(MatchesMonthYear("07/1999"));
  EXPECT_FALSE(MatchesMonthYear("13/1999"));
  EXPECT_TRUE(MatchesRelative("-100d"));
  EXPECT_TRUE(MatchesRelative("+2m"));
  EXPECT_FALSE(MatchesRelative("+0a"));
  EXPECT_FALSE(MatchesRelative("100d"));
  EXPECT_TRUE(MatchesDateGrammar("+1a"));
  EXPECT_FALSE(MatchesDateGrammar("01/01/2000 "));
}

}  // namespace
}  // namespace normkit
