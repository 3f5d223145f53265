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

#include "qgen/corpus/loader.hpp"
#include "qgen/error.hpp"
#include "qgen/jsonl.hpp"
#include "test_support.hpp"

namespace qgen::corpus {
namespace {

using testing::fixture_dir;

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::IoError;
}

std::string what_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

TEST(Loader, NotaFixtureHasTwelveBlocksOnTwoPages) {
  const auto doc = load_document(fixture_dir() / "nota_mini.blocks.json", DocumentRole::KnowledgeSource);
  EXPECT_EQ(doc.doc_id, "nota_mini");
  EXPECT_EQ(doc.pages.size(), 2u);
  EXPECT_EQ(doc.block_count(), 12u);
  EXPECT_EQ(doc.blocks().front()->text, "1.1 Integer");
  EXPECT_EQ(doc.blocks().back()->page, 2);
}

TEST(Loader, DegenerateBboxIsRejectedWithFieldPath) {
  const std::string body = R"({"doc_id":"d","role":"knowledge","pages":[{"page":1,"blocks":[
    {"text":"a","bbox":[5,5,5,9],"font_size":11}]}]})";
  EXPECT_EQ(code_of([&] { parse_document(body, DocumentRole::KnowledgeSource); }), Errc::MalformedBlocksFile);
  EXPECT_NE(what_of([&] { parse_document(body, DocumentRole::KnowledgeSource); }).find("pages[0].blocks[0].bbox"),
            std::string::npos);
}

TEST(Loader, ZeroBlocksIsEmptyDocument) {
  const std::string body = R"({"doc_id":"d","role":"knowledge","pages":[{"page":1,"blocks":[]}]})";
  EXPECT_EQ(code_of([&] { parse_document(body, DocumentRole::KnowledgeSource); }), Errc::EmptyDocument);
}

TEST(Loader, MissingFileIsFileNotFound) {
  EXPECT_EQ(code_of([] { load_document("/nonexistent/x.blocks.json", DocumentRole::KnowledgeSource); }),
            Errc::FileNotFound);
}

TEST(Loader, SyntaxErrorNamesLine) {
  const std::string body = "{\n\"doc_id\": \"d\",\n\"role\": \"knowledge\"\n\"pages\": []}";
  const auto msg = what_of([&] { parse_document(body, DocumentRole::KnowledgeSource, "f.json"); });
  EXPECT_NE(msg.find("f.json"), std::string::npos);
  EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
}

TEST(Loader, RoleMismatchIsRejected) {
  EXPECT_EQ(code_of([] { load_document(fixture_dir() / "rpt_mini.blocks.json", DocumentRole::KnowledgeSource); }),
            Errc::MalformedBlocksFile);
}

TEST(Loader, MissingAndMistypedFields) {
  const std::string no_font = R"({"doc_id":"d","role":"knowledge","pages":[{"page":1,"blocks":[
    {"text":"a","bbox":[0,0,5,9]}]}]})";
  EXPECT_NE(what_of([&] { parse_document(no_font, DocumentRole::KnowledgeSource); }).find("font_size"),
            std::string::npos);
  const std::string bad_page = R"({"doc_id":"d","role":"knowledge","pages":[{"page":"one","blocks":[]}]})";
  EXPECT_EQ(code_of([&] { parse_document(bad_page, DocumentRole::KnowledgeSource); }), Errc::MalformedBlocksFile);
}

TEST(Loader, WhitespaceIsNormalizedOnLoad) {
  const std::string body = R"({"doc_id":"d","role":"knowledge","pages":[{"page":1,"blocks":[
    {"text":"  a \t b\r\nc  ","bbox":[0,0,5,9],"font_size":11}]}]})";
  const auto doc = parse_document(body, DocumentRole::KnowledgeSource);
  EXPECT_EQ(doc.blocks()[0]->text, "a b\nc");
}

TEST(Flatten, JoinsBlocksAndPages) {
  const auto doc = testing::make_doc({{"a", 11, 1}, {"b", 11, 1}, {"c", 11, 2}});
  const auto flat = flatten(doc);
  EXPECT_EQ(flat.text, "a\nb\n\nc");
  ASSERT_EQ(flat.block_spans.size(), 3u);
  EXPECT_EQ(flat.text.substr(flat.block_spans[2].start, flat.block_spans[2].end - flat.block_spans[2].start), "c");
}

}  // namespace
}  // namespace qgen::corpus
