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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>

#include "qgen/pipeline/config.hpp"

namespace qgen::pipeline {

namespace fs = std::filesystem;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitProvider = 3;
inline constexpr int kExitState = 4;

/// Exit code for an error raised inside a stage.
int exit_code_for(const Error& error);

/// Fixed artifact locations under a workdir.
struct Workdir {
  fs::path root;

  fs::path knowledge_recursive_chunks() const { return root / "chunks" / "knowledge_recursive.jsonl"; }
  fs::path knowledge_structure_chunks() const { return root / "chunks" / "knowledge_structure.jsonl"; }
  fs::path standards_chunks() const { return root / "chunks" / "standards.jsonl"; }
  fs::path knowledge_recursive_index() const { return root / "indexes" / "knowledge_recursive.index.json"; }
  fs::path knowledge_structure_index() const { return root / "indexes" / "knowledge_structure.index.json"; }
  fs::path standards_index() const { return root / "indexes" / "standards.index.json"; }
  fs::path outcomes(generation::Method method) const;
  fs::path eval_records(generation::Method method) const;
  fs::path report_md() const { return root / "report.md"; }
  fs::path report_json() const { return root / "report.json"; }
  fs::path resolved_config() const { return root / "resolved_config.json"; }
};

/// Everything a stage needs. Providers are built from the config on first
/// use; tests may inject a transport or a sleeper.
struct StageContext {
  RunConfig config;
  std::shared_ptr<providers::HttpTransport> transport;
  providers::Sleeper sleeper = providers::real_sleeper();
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

/// Each command returns a process exit code: 0 ok, 2 input error, 3 provider
/// error, 4 pipeline-state error (missing or inconsistent artifacts).
/// Diagnostics go to ctx.err, progress lines to ctx.out.
int cmd_ingest(StageContext& ctx);
int cmd_index(StageContext& ctx);
int cmd_generate(StageContext& ctx);
int cmd_evaluate(StageContext& ctx);
/// Prints the stored report in config.report.format.
int cmd_report(StageContext& ctx);
/// ingest, index, generate, evaluate; stops at the first failing stage.
int cmd_run_all(StageContext& ctx);

}  // namespace qgen::pipeline
