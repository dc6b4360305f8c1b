// Copyright 2026 The Unseen Authors.
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

#include "unseen/unicode.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "unseen/error.hpp"

namespace unseen::unicode {
namespace {

TEST(Utf8, ValidAndInvalid) {
  EXPECT_TRUE(is_valid_utf8(""));
  EXPECT_TRUE(is_valid_utf8("abc"));
  EXPECT_TRUE(is_valid_utf8("\xd8\xb4"));  // U+0634
  EXPECT_FALSE(is_valid_utf8("\xd8"));
  EXPECT_FALSE(is_valid_utf8("\xc0\xaf"));  // overlong
  EXPECT_FALSE(is_valid_utf8("\xed\xa0\x80"));  // surrogate
  EXPECT_FALSE(is_valid_utf8("a\xffz"));
  EXPECT_THROW(require_valid_utf8("\xff"), EncodingError);
}

TEST(Nfc, ComposesDecomposedInput) {
  // Expected bytes computed with Python's unicodedata.normalize("NFC", ...).
  EXPECT_EQ(to_nfc("e\xcc\x81x"), "\xc3\xa9x");
  EXPECT_EQ(to_nfc("A\xcc\x8a"), "\xc3\x85");
  EXPECT_EQ(to_nfc("\xe1\x84\x80\xe1\x85\xa1\xe1\x86\xa8"), "\xea\xb0\x81");
  EXPECT_EQ(to_nfc("\xd8\xa7\xd9\x94"), "\xd8\xa3");
  EXPECT_TRUE(is_nfc("\xc3\xa9"));
  EXPECT_FALSE(is_nfc("e\xcc\x81"));
  EXPECT_THROW(to_nfc("\xff"), EncodingError);
}

TEST(Graphemes, ClustersAreNotNormalized) {
  const std::vector<std::string> expected = {"e\xcc\x81", "x"};
  EXPECT_EQ(grapheme_clusters("e\xcc\x81x"), expected);
  EXPECT_TRUE(grapheme_clusters("").empty());
}

TEST(Graphemes, EmojiSequenceIsOneCluster) {
  // Family: man ZWJ woman ZWJ girl.
  const std::string family =
      "\xf0\x9f\x91\xa8\xe2\x80\x8d\xf0\x9f\x91\xa9\xe2\x80\x8d\xf0\x9f\x91\xa7";
  EXPECT_EQ(grapheme_clusters(family).size(), 1u);
  EXPECT_EQ(grapheme_clusters("\r\n").size(), 1u);
}

TEST(FirstCodePoint, DecodesLeadingScalar) {
  EXPECT_EQ(first_code_point("\xd8\xb4x"), 0x0634);
  EXPECT_EQ(first_code_point("a"), U'a');
}

TEST(Trim, UnicodeWhitespace) {
  EXPECT_EQ(trim("  a b \t"), "a b");
  EXPECT_EQ(trim("\xc2\xa0x\xe3\x80\x80"), "x");  // NBSP, ideographic space
  EXPECT_EQ(trim("   "), "");
  EXPECT_EQ(trim(""), "");
}

}  // namespace
}  // namespace unseen::unicode
