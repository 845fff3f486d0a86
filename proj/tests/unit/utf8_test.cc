// Copyright 2026 The repattack Authors
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
#include "repattack/utf8.h"

#include <string>

#include "gtest/gtest.h"
#include "repattack/error.h"
#include "repattack/hashing.h"

namespace repattack {
namespace {

TEST(Utf8Test, ValidatesWellFormedText) {
  EXPECT_TRUE(utf8::IsValid("plain ascii"));
  EXPECT_TRUE(utf8::IsValid("caf\xc3\xa9 \xe2\x80\x94 \xf0\x9f\x98\x80"));
  EXPECT_TRUE(utf8::IsValid(""));
}

TEST(Utf8Test, RejectsMalformedText) {
  EXPECT_FALSE(utf8::IsValid("\xff"));
  EXPECT_FALSE(utf8::IsValid("\xc3"));          // truncated
  EXPECT_FALSE(utf8::IsValid("\xc0\xaf"));      // overlong
  EXPECT_FALSE(utf8::IsValid("\xed\xa0\x80"));  // surrogate
  EXPECT_THROW(utf8::Validate("ab\x80"), EncodingError);
}

TEST(Utf8Test, CountsCodepoints) {
  EXPECT_EQ(utf8::Length("abc"), 3u);
  EXPECT_EQ(utf8::Length("caf\xc3\xa9"), 4u);
  EXPECT_EQ(utf8::Decode("a\xe2\x80\x94").size(), 2u);
}

TEST(Utf8Test, TrimsAsciiWhitespace) {
  EXPECT_EQ(utf8::Trim("  a b \n"), "a b");
  EXPECT_EQ(utf8::Trim(" \t "), "");
  const auto [begin, end] = utf8::TrimRange("  ab ");
  EXPECT_EQ(begin, 2u);
  EXPECT_EQ(end, 4u);
}

TEST(HashingTest, MatchesReferenceVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(HexDigest("a"), "af63dc4c8601ec8c");
}

}  // namespace
}  // namespace repattack
