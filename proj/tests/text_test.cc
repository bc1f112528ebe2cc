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

#include "normkit/text.h"

#include <gtest/gtest.h>

#include "normkit/rng.h"

namespace normkit {
namespace {

TEST(Text, FoldDropsAccentsAndCase) {
  EXPECT_EQ(Fold("Março"), "marco");
  EXPECT_EQ(Fold("HÁ"), "ha");
  EXPECT_EQ(Fold("São Paulo"), "sao paulo");
  EXPECT_EQ(Fold("Ñ"), "n");
}

TEST(Text, TrimOnlyTouchesEnds) {
  EXPECT_EQ(Trim("  a b \t\n"), "a b");
  EXPECT_EQ(Trim(""), "");
  EXPECT_EQ(Trim("   "), "");
}

TEST(Text, SplitAndJoinAreInverse) {
  auto parts = SplitString("a, b, , c", ", ");
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts[2], "");
  EXPECT_EQ(Join(parts, ", "), "a, b, , c");
}

TEST(Text, EditDistanceCountsCodePoints) {
  EXPECT_EQ(EditDistance("março", "marco"), 1);
  EXPECT_EQ(EditDistance("kitten", "sitting"), 3);
  EXPECT_EQ(EditDistance("", "abc"), 3);
  EXPECT_EQ(EditDistance("abc", "abc"), 0);
}

TEST(Text, Utf8RoundTripProperty) {
  RecordRng rng(11, 0, Stream::kPayload);
  for (int i = 0; i < 500; ++i) {
    std::u32string s;
    int len = static_cast<int>(rng.Uniform(0, 12));
    for (int k = 0; k < len; ++k) {
      // Skip the surrogate block.
      char32_t c = static_cast<char32_t>(rng.Uniform(1, 0xD7FF));
      s.push_back(c);
    }
    EXPECT_EQ(DecodeUtf8(EncodeUtf8(s)), s);
    EXPECT_EQ(CodePointLength(EncodeUtf8(s)), s.size());
  }
}

TEST(Text, Fnv1aKnownVectors) {
  // Published FNV-1a 64-bit test vectors.
  EXPECT_EQ(Fnv1aHex(""), "cbf29ce484222325");
  EXPECT_EQ(Fnv1aHex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(Fnv1aHex("foobar"), "85944171f73967e8");
}

}  // namespace
}  // namespace normkit
