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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qgen/error.hpp"
#include "qgen/eval/report.hpp"
#include "qgen/pipeline/config.hpp"
#include "qgen/pipeline/stages.hpp"
#include "test_support.hpp"

namespace qgen::pipeline {
namespace {

using nlohmann::json;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct StageRun {
  testing::TempDir dir{"qgen-pipe"};
  std::shared_ptr<testing::ScriptedTransport> transport = std::make_shared<testing::ScriptedTransport>();
  std::ostringstream out, err;
  StageContext ctx;

  explicit StageRun(std::size_t n = 20) {
    ctx.config = load_config(testing::fixture_dir() / "config.json");
    ctx.config.paths.workdir = dir.path();
    ctx.config.generation.n = n;
    ctx.transport = transport;
    ctx.sleeper = testing::no_sleep();
    ctx.out = &out;
    ctx.err = &err;
  }
  Workdir wd() const { return {dir.path()}; }
};

TEST(Config, FixtureResolvesRelativePaths) {
  const auto c = load_config(testing::fixture_dir() / "config.json");
  EXPECT_EQ(c.paths.knowledge_blocks, testing::fixture_dir() / "nota_mini.blocks.json");
  EXPECT_EQ(c.paths.workdir, testing::fixture_dir() / "work");
  EXPECT_EQ(c.generation.topic, "Nombor Nisbah");
  EXPECT_EQ(c.providers.mock_dimension, 64u);
  EXPECT_EQ(c.chunking.recursive.max_chars, 300u);
}

TEST(Config, UnknownKeysAndBadValuesRejected) {
  auto code = [](const json& doc) {
    try {
      validate_config(parse_config(doc, "/base"));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::IoError;
  };
  EXPECT_EQ(code({{"generaton", json::object()}}), Errc::InvalidConfig);
  EXPECT_EQ(code({{"evaluation", {{"tau", 1.5}}}}), Errc::InvalidConfig);
  EXPECT_EQ(code({{"evaluation", {{"tau", "high"}}}}), Errc::InvalidConfig);
  EXPECT_EQ(code({{"generation", {{"methods", {"rag_generic", "rag"}}}}}), Errc::InvalidConfig);
  EXPECT_EQ(code({{"chunking", {{"recursive", {{"max_chars", 50}, {"overlap", 60}}}}}}), Errc::InvalidConfig);
}

TEST(Config, ResolvedJsonReparses) {
  const auto c = load_config(testing::fixture_dir() / "config.json");
  const auto j = config_to_json(c);
  EXPECT_EQ(config_to_json(parse_config(j, "/elsewhere")), j);
}

TEST(Config, OverridesAndMethodList) {
  auto c = load_config(testing::fixture_dir() / "config.json");
  Overrides o;
  o.n = 7;
  o.tau = 0.3;
  o.k = 5;
  o.methods = parse_method_list("rag_structure, basic_prompt");
  apply_overrides(c, o);
  EXPECT_EQ(c.generation.n, 7u);
  EXPECT_EQ(c.evaluation.tau, 0.3);
  EXPECT_EQ(c.evaluation.k, 5u);
  ASSERT_EQ(c.generation.methods.size(), 2u);
  EXPECT_EQ(c.generation.methods[0], generation::Method::RagStructureAware);
  EXPECT_THROW(parse_method_list("rag_generic,nope"), Error);
}

TEST(Providers, RealModeNeedsKey) {
  RunConfig c;
  c.providers.mock = false;
  c.providers.api_key_env = "QGEN_TEST_KEY_THAT_IS_NOT_SET";
  ::unsetenv(c.providers.api_key_env.c_str());
  try {
    make_providers(c, std::make_shared<testing::ScriptedTransport>());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidConfig);
  }
  ::setenv("QGEN_TEST_KEY_SET", "k", 1);
  c.providers.api_key_env = "QGEN_TEST_KEY_SET";
  const auto p = make_providers(c, std::make_shared<testing::ScriptedTransport>());
  EXPECT_EQ(p.chat->tag(), "http-chat:gpt-4o");
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(Error(Errc::InvalidConfig, "")), kExitInput);
  EXPECT_EQ(exit_code_for(Error(Errc::FileNotFound, "")), kExitInput);
  EXPECT_EQ(exit_code_for(Error(Errc::MalformedChunkFile, "")), kExitInput);
  EXPECT_EQ(exit_code_for(ProviderError(500, "", true)), kExitProvider);
  EXPECT_EQ(exit_code_for(Error(Errc::MissingArtifact, "")), kExitState);
  EXPECT_EQ(exit_code_for(Error(Errc::EmptyBatch, "")), kExitState);
}

TEST(Stages, RunAllMockNeverTouchesTransport) {
  StageRun r;
  ASSERT_EQ(cmd_run_all(r.ctx), kExitOk) << r.err.str();
  EXPECT_EQ(r.transport->calls(), 0u);
  const auto rows = eval::parse_markdown_table(slurp(r.wd().report_md()));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].method, "Method 1: Structured Prompt");
  EXPECT_EQ(rows[3].method, "Method 4: Manual RAG");
  EXPECT_TRUE(fs::exists(r.wd().resolved_config()));
  EXPECT_TRUE(fs::exists(r.wd().standards_index()));
  EXPECT_EQ(json::parse(slurp(r.wd().report_json())).size(), 4u);
}

TEST(Stages, RerunIsByteIdentical) {
  StageRun a, b;
  ASSERT_EQ(cmd_run_all(a.ctx), kExitOk) << a.err.str();
  ASSERT_EQ(cmd_run_all(b.ctx), kExitOk) << b.err.str();
  EXPECT_EQ(slurp(a.wd().report_md()), slurp(b.wd().report_md()));
  EXPECT_EQ(slurp(a.wd().report_json()), slurp(b.wd().report_json()));
  for (auto m : generation::kAllMethods) {
    EXPECT_EQ(slurp(a.wd().outcomes(m)), slurp(b.wd().outcomes(m)));
    EXPECT_EQ(slurp(a.wd().eval_records(m)), slurp(b.wd().eval_records(m)));
  }
  EXPECT_EQ(slurp(a.wd().knowledge_structure_index()), slurp(b.wd().knowledge_structure_index()));
}

TEST(Stages, SingleMethodReport) {
  StageRun r;
  r.ctx.config.generation.methods = {generation::Method::RagGeneric};
  ASSERT_EQ(cmd_run_all(r.ctx), kExitOk) << r.err.str();
  const auto rows = eval::parse_markdown_table(slurp(r.wd().report_md()));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].method, "Method 3: Generic RAG");
  r.out.str("");
  r.ctx.config.report.format = eval::ReportFormat::Json;
  ASSERT_EQ(cmd_report(r.ctx), kExitOk);
  EXPECT_EQ(json::parse(r.out.str()).size(), 1u);
}

TEST(Stages, MissingStandardsFileIsInputError) {
  StageRun r;
  r.ctx.config.paths.standards_blocks = r.dir / "absent.json";
  EXPECT_EQ(cmd_ingest(r.ctx), kExitInput);
  EXPECT_NE(r.err.str().find("qgen ingest:"), std::string::npos);
}

TEST(Stages, MissingPrerequisitesAreStateErrors) {
  StageRun r;
  EXPECT_EQ(cmd_index(r.ctx), kExitState);
  EXPECT_EQ(cmd_generate(r.ctx), kExitState);
  EXPECT_EQ(cmd_evaluate(r.ctx), kExitState);
  EXPECT_EQ(cmd_report(r.ctx), kExitState);
}

TEST(Stages, EmptyOutcomesAreStateError) {
  StageRun r;
  r.ctx.config.generation.methods = {generation::Method::BasicPrompt};
  ASSERT_EQ(cmd_ingest(r.ctx), kExitOk);
  ASSERT_EQ(cmd_index(r.ctx), kExitOk);
  ASSERT_EQ(cmd_generate(r.ctx), kExitOk);
  std::ofstream(r.wd().outcomes(generation::Method::BasicPrompt), std::ios::trunc).close();
  EXPECT_EQ(cmd_evaluate(r.ctx), kExitState);
}

TEST(Stages, CorruptChunkLineNamesTheLine) {
  StageRun r;
  ASSERT_EQ(cmd_ingest(r.ctx), kExitOk);
  const auto path = r.wd().standards_chunks();
  std::string content = slurp(path);
  const auto second = content.find('\n') + 1;
  content.insert(second, "{not json\n");
  std::ofstream(path, std::ios::trunc) << content;
  EXPECT_EQ(cmd_index(r.ctx), kExitInput);
  EXPECT_NE(r.err.str().find("standards.jsonl:2"), std::string::npos) << r.err.str();
}

TEST(Stages, IndexFromOtherEmbedderIsRejected) {
  StageRun r;
  ASSERT_EQ(cmd_ingest(r.ctx), kExitOk);
  ASSERT_EQ(cmd_index(r.ctx), kExitOk);
  r.ctx.config.providers.mock_dimension = 128;
  EXPECT_EQ(cmd_generate(r.ctx), kExitState);
}

}  // namespace
}  // namespace qgen::pipeline
