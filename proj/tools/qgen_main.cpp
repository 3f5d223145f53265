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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qgen/error.hpp"
#include "qgen/pipeline/config.hpp"
#include "qgen/pipeline/stages.hpp"

namespace {

namespace pl = qgen::pipeline;

struct Flags {
  std::string config;
  bool mock = false;
  std::optional<std::size_t> n;
  std::optional<std::string> methods;
  std::optional<double> tau;
  std::optional<std::size_t> k;
  std::optional<std::string> workdir;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "Run config (JSON)");
  cmd->add_flag("--mock", f.mock, "Use offline mock providers");
  cmd->add_option("--n", f.n, "Questions per method")->check(CLI::PositiveNumber);
  cmd->add_option("--methods", f.methods,
                  "Comma-separated subset of structured_prompt,basic_prompt,rag_generic,rag_structure");
  cmd->add_option("--tau", f.tau, "Retrieval threshold for validity")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--k", f.k, "Standards retrieved for validity")->check(CLI::PositiveNumber);
  cmd->add_option("--workdir", f.workdir, "Artifact directory");
}

int run(int (*command)(pl::StageContext&), const Flags& f) {
  pl::StageContext ctx;
  try {
    ctx.config = f.config.empty() ? pl::RunConfig{} : pl::load_config(f.config);
    pl::Overrides o;
    if (f.mock) o.mock = true;
    o.n = f.n;
    if (f.methods) o.methods = pl::parse_method_list(*f.methods);
    o.tau = f.tau;
    o.k = f.k;
    if (f.workdir) o.workdir = *f.workdir;
    pl::apply_overrides(ctx.config, o);
  } catch (const qgen::Error& e) {
    std::cerr << "qgen: " << e.what() << "\n";
    return pl::kExitInput;
  }
  return command(ctx);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curriculum-aligned MCQ generation and evaluation"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    int (*command)(pl::StageContext&);
  };
  const Sub subs[] = {
      {"ingest", "Chunk the knowledge and standards documents", &pl::cmd_ingest},
      {"index", "Embed chunks and persist the three indexes", &pl::cmd_index},
      {"generate", "Generate questions for each method", &pl::cmd_generate},
      {"evaluate", "Score questions and write the report", &pl::cmd_evaluate},
      {"run-all", "ingest, index, generate and evaluate", &pl::cmd_run_all},
      {"report", "Print the stored report", &pl::cmd_report},
  };
  Flags flags;
  int (*selected)(pl::StageContext&) = nullptr;
  for (const auto& s : subs) {
    auto* cmd = app.add_subcommand(s.name, s.help);
    add_flags(cmd, flags);
    cmd->callback([&selected, fn = s.command] { selected = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pl::kExitInput;
  }
  return run(selected, flags);
}
