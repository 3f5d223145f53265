/*
 * Copyright 2026 The qgen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "qgen/text_util.hpp"

namespace qgen::text {
namespace {

TEST(NormalizeWhitespace, CollapsesSpacesKeepsNewlines) {
  EXPECT_EQ(normalize_whitespace("  a \t b  \r\n  c  \n\n d "), "a b\nc\n\nd");
}

TEST(SquashWhitespace, CollapsesEverything) { EXPECT_EQ(squash_whitespace(" a\n\n b\tc "), "a b c"); }

TEST(StartsWithWord, RequiresWordBoundary) {
  EXPECT_TRUE(starts_with_word("Contoh 7(a)", "Contoh"));
  EXPECT_TRUE(starts_with_word("contoh: x", "Contoh"));
  EXPECT_TRUE(starts_with_word("Contoh", "Contoh"));
  EXPECT_FALSE(starts_with_word("Contohnya begini", "Contoh"));
  EXPECT_FALSE(starts_with_word("Con", "Contoh"));
  EXPECT_TRUE(starts_with_word("Latih Diri 1.2", "Latih Diri"));
}

TEST(WordTokens, LowercasesAndSplitsOnPunctuation) {
  const std::vector<std::string> expected{"nombor", "1", "2", "ŋ", "ok"};
  EXPECT_EQ(word_tokens("Nombor 1.2, ŋ-OK!"), expected);
  EXPECT_TRUE(word_tokens(" .,; ").empty());
}

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(hex64(0xabcULL), "0000000000000abc");
}

TEST(Utf8Length, CountsCodePoints) {
  EXPECT_EQ(utf8_length("abc"), 3u);
  EXPECT_EQ(utf8_length("é"), 1u);
  EXPECT_EQ(utf8_length("ŋombor"), 6u);
}

}  // namespace
}  // namespace qgen::text
