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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qgen/corpus/chunkers.hpp"
#include "qgen/corpus/loader.hpp"
#include "qgen/error.hpp"
#include "qgen/text_util.hpp"
#include "test_support.hpp"

namespace qgen::corpus {
namespace {

using testing::make_doc;

std::string paragraphs_250() {
  // Five 48-character paragraphs joined by blank lines: 5 * 48 + 4 * 2 = 248,
  // plus a trailing "ok" makes 250 bytes.
  std::string text;
  for (int p = 0; p < 5; ++p) {
    if (p) text += "\n\n";
    text += std::string(47, static_cast<char>('a' + p));
    text += '.';
  }
  text += "ok";
  return text;
}

void expect_covers(const std::vector<Chunk>& chunks, std::size_t length) {
  std::vector<bool> covered(length, false);
  for (const auto& c : chunks) {
    ASSERT_TRUE(c.char_span.has_value());
    for (std::size_t i = c.char_span->start; i < c.char_span->end; ++i) covered[i] = true;
  }
  for (std::size_t i = 0; i < length; ++i) ASSERT_TRUE(covered[i]) << "offset " << i << " uncovered";
}

TEST(Recursive, FiveParagraphsAreCovered) {
  const std::string text = paragraphs_250();
  ASSERT_EQ(text.size(), 250u);
  const auto chunks = chunk_text_recursive(text, "d", {100, 20, false});
  EXPECT_GE(chunks.size(), 3u);
  expect_covers(chunks, text.size());
  for (const auto& c : chunks) {
    EXPECT_LE(text::utf8_length(c.text), 100u);
    EXPECT_EQ(c.text, text.substr(c.char_span->start, c.char_span->end - c.char_span->start));
  }
}

TEST(Recursive, ShortTextIsOneChunk) {
  const auto doc = make_doc({{"Integer ialah nombor bulat."}});
  const auto chunks = chunk_recursive(doc, {});
  ASSERT_EQ(chunks.size(), 1u);
  EXPECT_EQ(chunks[0].text, "Integer ialah nombor bulat.");
  EXPECT_EQ(chunks[0].chunk_id, "doc/rec/00000");
  EXPECT_EQ(chunks[0].strategy, ChunkStrategy::Recursive);
}

TEST(Recursive, OverlapNotBelowMaxIsRejected) {
  const auto doc = make_doc({{"x"}});
  try {
    chunk_recursive(doc, {50, 60, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidChunkParams);
  }
}

TEST(Recursive, LongTokenIsKeptWholeUnlessHardSplit) {
  const std::string token(130, 'z');
  const std::string text = "awal " + token + " akhir";
  const auto whole = chunk_text_recursive(text, "d", {50, 10, false});
  bool found = false;
  for (const auto& c : whole) found = found || c.text.find(token) != std::string::npos;
  EXPECT_TRUE(found);
  const auto split = chunk_text_recursive(text, "d", {50, 10, true});
  for (const auto& c : split) EXPECT_LE(text::utf8_length(c.text), 50u);
  expect_covers(split, text.size());
}

TEST(Recursive, ConsecutiveChunksOverlap) {
  std::string text;
  for (int i = 0; i < 40; ++i) text += "kata" + std::to_string(i) + " ";
  const auto chunks = chunk_text_recursive(text, "d", {60, 20, false});
  ASSERT_GT(chunks.size(), 2u);
  for (std::size_t i = 1; i < chunks.size(); ++i) {
    EXPECT_LT(chunks[i].char_span->start, chunks[i - 1].char_span->end);
    EXPECT_LE(chunks[i - 1].char_span->end - chunks[i].char_span->start, 20u);
  }
}

TEST(Recursive, PropertyCoverageAndBoundOnRandomTexts) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t max_chars = 40 + rng() % 200;
    const std::size_t overlap = rng() % (max_chars / 2);
    const std::string text = testing::random_text(rng, 50 + rng() % 1500);
    const auto chunks = chunk_text_recursive(text, "r", {max_chars, overlap, false});
    expect_covers(chunks, text.size());
    for (const auto& c : chunks) {
      EXPECT_EQ(c.text, text.substr(c.char_span->start, c.char_span->end - c.char_span->start));
      if (text::utf8_length(c.text) > max_chars) {
        // Only a single separator-free token may exceed the bound.
        const auto t = text::trim(c.text);
        EXPECT_EQ(t.find_first_of(" \n"), std::string_view::npos) << c.text;
      }
    }
    EXPECT_EQ(chunks, chunk_text_recursive(text, "r", {max_chars, overlap, false}));
  }
}

TEST(StructureAware, HeadingStartsNewChunk) {
  const auto doc = make_doc({{"H1", 18}, {"p1", 11}, {"p2", 11}, {"H2", 18}, {"p3", 11}});
  StructureParams params;
  params.heading_font_delta = 4.0;
  const auto chunks = chunk_structure_aware(doc, params);
  ASSERT_EQ(chunks.size(), 2u);
  EXPECT_EQ(chunks[0].text, "H1\np1\np2");
  EXPECT_EQ(chunks[1].text, "H2\np3");
  EXPECT_EQ(*chunks[1].source_blocks, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(chunks[1].chunk_id, "doc/sa/00001");
}

TEST(StructureAware, ContohUnitIsNeverSplit) {
  const std::size_t max_chars = 200;
  const std::string filler(99, 'k');  // three continuations + header ~ 1.5 * max_chars
  const auto doc = make_doc({{"Pengenalan ringkas.", 11},
                             {"Contoh 7 Selesaikan.", 11},
                             {filler, 11},
                             {filler, 11},
                             {std::string(60, 'm'), 11},
                             {"Latih Diri 1", 11}});
  StructureParams params;
  params.max_chars = max_chars;
  const auto chunks = chunk_structure_aware(doc, params);
  const Chunk* unit = nullptr;
  for (const auto& c : chunks)
    if (c.text.starts_with("Contoh 7")) unit = &c;
  ASSERT_NE(unit, nullptr);
  EXPECT_EQ(*unit->source_blocks, (std::vector<std::size_t>{1, 2, 3, 4}));
  EXPECT_GT(text::utf8_length(unit->text), max_chars);
  EXPECT_LE(text::utf8_length(unit->text), max_chars * 3 / 2 + 10);
}

TEST(StructureAware, UniformBlocksSplitEveryTwo) {
  std::vector<testing::BlockSpec> blocks;
  for (int i = 0; i < 6; ++i) blocks.push_back({std::string(40, static_cast<char>('a' + i)), 11});
  StructureParams params;
  params.max_chars = 100;  // two blocks = 81 chars, three = 122
  const auto chunks = chunk_structure_aware(make_doc(blocks), params);
  ASSERT_EQ(chunks.size(), 3u);
  EXPECT_EQ(*chunks[0].source_blocks, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(*chunks[1].source_blocks, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(*chunks[2].source_blocks, (std::vector<std::size_t>{4, 5}));
}

TEST(StructureAware, KeywordsMatchWholeWordsOnly) {
  const auto doc = make_doc({{"Pengenalan.", 11}, {"Contohnya, suhu.", 11}, {"Contoh 1 x", 11}});
  const auto chunks = chunk_structure_aware(doc, {});
  ASSERT_EQ(chunks.size(), 2u);
  EXPECT_EQ(chunks[0].text, "Pengenalan.\nContohnya, suhu.");
}

TEST(StructureAware, PropertyPartitionsBlocksInOrder) {
  std::mt19937_64 rng(99);
  const std::vector<std::string> openers{"", "", "", "Contoh 3 ", "Latih Diri ", "Standard Pembelajaran "};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<testing::BlockSpec> blocks;
    const int n = 1 + static_cast<int>(rng() % 25);
    for (int i = 0; i < n; ++i) {
      const double font = (rng() % 5 == 0) ? 18.0 : 11.0;
      blocks.push_back({openers[rng() % openers.size()] + testing::random_text(rng, 20 + rng() % 200), font,
                        1 + i / 8});
    }
    const auto doc = make_doc(blocks);
    StructureParams params;
    params.max_chars = 100 + rng() % 400;
    const auto chunks = chunk_structure_aware(doc, params);
    std::vector<std::size_t> seen;
    for (const auto& c : chunks) {
      ASSERT_TRUE(c.source_blocks.has_value());
      ASSERT_FALSE(c.source_blocks->empty());
      seen.insert(seen.end(), c.source_blocks->begin(), c.source_blocks->end());
    }
    ASSERT_EQ(seen.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < seen.size(); ++i) EXPECT_EQ(seen[i], i);
  }
}

TEST(RptStandards, SplitsAtCodes) {
  const auto doc = load_document(testing::fixture_dir() / "rpt_mini.blocks.json", DocumentRole::StandardsBlueprint);
  const auto standards = chunk_rpt_standards(doc);
  ASSERT_EQ(standards.size(), 6u);
  EXPECT_EQ(standards[0].standard.code, "1.1.1");
  EXPECT_EQ(standards[2].standard.description, "Mewakilkan integer pada garis nombor.");
  EXPECT_EQ(standards[5].standard.code, "1.2.3");
  EXPECT_EQ(standards[5].chunk.chunk_id, "rpt_mini/std/00005");
  for (const auto& s : standards) EXPECT_TRUE(s.chunk.text.starts_with(s.standard.code));
}

TEST(RptStandards, ErrorCases) {
  auto code_of = [](const SourceDocument& d) {
    try {
      chunk_rpt_standards(d);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::IoError;
  };
  const auto role = DocumentRole::StandardsBlueprint;
  EXPECT_EQ(code_of(make_doc({{"Tiada kod di sini."}}, role)), Errc::NoStandardsFound);
  EXPECT_EQ(code_of(make_doc({{"1.1.1 A"}, {"1.1.1 B"}}, role)), Errc::DuplicateStandard);
  EXPECT_EQ(code_of(make_doc({{"1.1.1 A"}})), Errc::WrongRole);
}

TEST(StandardCodes, NumericOrder) {
  EXPECT_TRUE(standard_code_less("1.2.3", "1.10.1"));
  EXPECT_TRUE(standard_code_less("1.1.2", "1.1.10"));
  EXPECT_FALSE(standard_code_less("2.1.1", "1.9.9"));
  EXPECT_FALSE(standard_code_less("1.1.1", "1.1.1"));
}

}  // namespace
}  // namespace qgen::corpus
