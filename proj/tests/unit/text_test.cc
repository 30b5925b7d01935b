// Copyright 2026 The swapgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swapgen/text.h"

#include <gtest/gtest.h>

namespace swapgen::text {
namespace {

TEST(TextTest, CodepointLengthCountsCharactersNotBytes) {
  EXPECT_EQ(CodepointLength(""), 0u);
  EXPECT_EQ(CodepointLength("abc"), 3u);
  EXPECT_EQ(CodepointLength("Beyoncé"), 7u);
  EXPECT_EQ(CodepointLength("日本"), 2u);
  EXPECT_EQ(CodepointLength("\xF0\x9F\x98\x80"), 1u);
}

TEST(TextTest, RejectsInvalidUtf8) {
  EXPECT_TRUE(IsValidUtf8("Württemberg"));
  EXPECT_FALSE(IsValidUtf8("\xC3"));
  EXPECT_FALSE(IsValidUtf8("a\xFF"));
}

TEST(TextTest, IndexMapsBothWays) {
  const std::string s = "aé日b";
  const CodepointIndex index(s);
  ASSERT_EQ(index.size(), 4u);
  EXPECT_EQ(index.ByteOffset(0), 0u);
  EXPECT_EQ(index.ByteOffset(2), 3u);
  EXPECT_EQ(index.ByteOffset(4), s.size());
  EXPECT_EQ(index.CodepointAt(3), 2u);
  EXPECT_FALSE(index.CodepointAt(2).has_value());
}

TEST(TextTest, SubstrUsesCodepoints) {
  EXPECT_EQ(Substr("Beyoncé Knowles", 0, 7), "Beyoncé");
  EXPECT_EQ(Substr("Beyoncé Knowles", 8, 15), "Knowles");
  EXPECT_FALSE(Substr("abc", 2, 4).has_value());
  EXPECT_FALSE(Substr("abc", 2, 1).has_value());
}

TEST(TextTest, LowercasesBeyondAscii) {
  EXPECT_EQ(ToLower("BEYONCÉ"), "beyoncé");
  EXPECT_EQ(ToLower("ÄÖÜ"), "äöü");
  EXPECT_TRUE(ContainsCaseless("What are the only native mammals", "NATIVE"));
  EXPECT_FALSE(ContainsCaseless("Beyonce", "Beyoncé"));
}

TEST(TextTest, DetectsNfc) {
  EXPECT_TRUE(IsNfc("Beyonc\xC3\xA9"));
  EXPECT_FALSE(IsNfc("Beyonce\xCC\x81"));
}

TEST(TextTest, MatchInitialCase) {
  EXPECT_EQ(MatchInitialCase("Start", "end"), "End");
  EXPECT_EQ(MatchInitialCase("start", "end"), "end");
  EXPECT_EQ(MatchInitialCase("start", "End"), "end");
  EXPECT_EQ(MatchInitialCase("Énorme", "petit"), "Petit");
  EXPECT_TRUE(StartsWithUpper("Écoute"));
  EXPECT_FALSE(StartsWithUpper("1957"));
}

}  // namespace
}  // namespace swapgen::text
