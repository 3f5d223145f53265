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

#include <gtest/gtest.h>

#include "qgen/error.hpp"
#include "qgen/generation/prompts.hpp"
#include "test_support.hpp"

namespace qgen::generation {
namespace {

corpus::Chunk chunk(const std::string& id, const std::string& text) {
  corpus::Chunk c;
  c.chunk_id = id;
  c.doc_id = "doc";
  c.text = text;
  return c;
}

TEST(Prompts, StructuredCarriesSchemaBasicDoesNot) {
  const auto s = build_prompt_structured("Integer");
  const auto b = build_prompt_basic("Integer");
  ASSERT_TRUE(s.schema.has_value());
  EXPECT_EQ(*s.schema, mcq_response_schema());
  EXPECT_FALSE(b.schema.has_value());
  EXPECT_NE(s.user.find("Integer"), std::string::npos);
  EXPECT_NE(b.user.find("Integer"), std::string::npos);
  EXPECT_EQ(s.system, b.system);
  EXPECT_NE(s.fingerprint(), b.fingerprint());
  EXPECT_EQ(b.fingerprint(), build_prompt_basic("Integer").fingerprint());
  EXPECT_NE(b.fingerprint(), build_prompt_basic("Pecahan").fingerprint());
}

TEST(Prompts, EmptyInputsRejected) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::IoError;
  };
  EXPECT_EQ(code([] { build_prompt_basic("  "); }), Errc::EmptyTopic);
  EXPECT_EQ(code([] { build_prompt_structured(""); }), Errc::EmptyTopic);
  EXPECT_EQ(code([] { build_prompt_rag("Integer", {}); }), Errc::EmptyContext);
  EXPECT_EQ(code([] { build_prompt_qa("Q", {}); }), Errc::EmptyContext);
}

TEST(Prompts, RagContextIsVerbatimAndOrdered) {
  const std::vector<corpus::Chunk> ctx{chunk("k/sa/00003", "Contoh 7(a) Tandakan -3 {topic} pada garis.\n  baris dua"),
                                       chunk("k/sa/00001", "Nota { kurungan } tanpa nama.")};
  const auto p = build_prompt_rag("Integer", ctx);
  EXPECT_NE(p.user.find("Contoh 7(a) Tandakan -3 {topic} pada garis.\n  baris dua"), std::string::npos);
  const auto blocks = extract_context_blocks(p.user);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0].first, "k/sa/00003");
  EXPECT_EQ(blocks[0].second, ctx[0].text);
  EXPECT_EQ(blocks[1].second, ctx[1].text);
  EXPECT_LT(p.user.find("k/sa/00003"), p.user.find("k/sa/00001"));
}

TEST(Prompts, RagContextPropertyOnRandomChunks) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<corpus::Chunk> ctx;
    const std::size_t n = 1 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i)
      ctx.push_back(chunk("d/rec/" + std::to_string(rng() % 1000), testing::random_text(rng, 10 + rng() % 300)));
    const auto p = build_prompt_rag("Topik", ctx);
    const auto blocks = extract_context_blocks(p.user);
    ASSERT_EQ(blocks.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(blocks[i].first, ctx[i].chunk_id);
      EXPECT_EQ(blocks[i].second, ctx[i].text);
    }
  }
}

TEST(Prompts, QaPromptEmbedsQuestionAndContext) {
  const std::vector<corpus::Chunk> ctx{chunk("rpt/std/00000", "1.1.1 Mengenal nombor positif.")};
  const auto p = build_prompt_qa("Apakah integer?", ctx);
  EXPECT_NE(p.user.find("Apakah integer?"), std::string::npos);
  EXPECT_NE(p.user.find("1.1.1 Mengenal nombor positif."), std::string::npos);
  EXPECT_FALSE(p.schema.has_value());
}

TEST(RenderTemplate, SinglePass) {
  EXPECT_EQ(render_template("a {x} b {y} {x}", {{"x", "{y}"}, {"y", "2"}}), "a {y} b 2 {y}");
  EXPECT_EQ(render_template("{\"k\": 1} {x", {{"x", "1"}}), "{\"k\": 1} {x");
}

TEST(Templates, BuiltinMatchesResourceFiles) {
  const auto disk = PromptTemplates::load_dir(QGEN_PROMPT_SOURCE_DIR);
  const auto& built = PromptTemplates::builtin();
  EXPECT_EQ(built.version, "v1");
  EXPECT_EQ(built.generate_system, disk.generate_system);
  EXPECT_EQ(built.structured_user, disk.structured_user);
  EXPECT_EQ(built.basic_user, disk.basic_user);
  EXPECT_EQ(built.rag_user, disk.rag_user);
  EXPECT_EQ(built.qa_system, disk.qa_system);
  EXPECT_EQ(built.qa_user, disk.qa_user);
}

}  // namespace
}  // namespace qgen::generation
