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

#include "qgen/pipeline/stages.hpp"

#include <iostream>

#include <fmt/format.h>

#include "qgen/corpus/chunk_io.hpp"
#include "qgen/corpus/chunkers.hpp"
#include "qgen/corpus/loader.hpp"
#include "qgen/error.hpp"
#include "qgen/eval/evaluate.hpp"
#include "qgen/eval/report.hpp"
#include "qgen/generation/generator.hpp"
#include "qgen/jsonl.hpp"
#include "qgen/vecstore/index.hpp"

namespace qgen::pipeline {

using generation::GenOutcome;
using generation::Method;
using nlohmann::json;

int exit_code_for(const Error& error) {
  switch (error.code()) {
    case Errc::Provider:
    case Errc::UnsupportedCapability:
    case Errc::LengthMismatch:
      return kExitProvider;
    case Errc::MissingArtifact:
    case Errc::EmptyIndex:
    case Errc::DimensionMismatch:
    case Errc::MissingIndex:
    case Errc::MissingEmbedder:
    case Errc::EmptyStandards:
    case Errc::WrongIndexRole:
    case Errc::EmptyBatch:
    case Errc::DanglingReference:
    case Errc::CardinalityMismatch:
      return kExitState;
    default:
      return kExitInput;
  }
}

fs::path Workdir::outcomes(Method method) const {
  return root / "outcomes" / (std::string(generation::to_string(method)) + ".jsonl");
}

fs::path Workdir::eval_records(Method method) const {
  return root / "eval" / (std::string(generation::to_string(method)) + ".jsonl");
}

namespace {

std::ostream& out_of(StageContext& ctx) { return ctx.out ? *ctx.out : std::cout; }
std::ostream& err_of(StageContext& ctx) { return ctx.err ? *ctx.err : std::cerr; }

template <typename Fn>
int guarded(StageContext& ctx, const char* stage, Fn&& fn) {
  try {
    fn();
    return kExitOk;
  } catch (const Error& e) {
    err_of(ctx) << "qgen " << stage << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err_of(ctx) << "qgen " << stage << ": internal error: " << e.what() << "\n";
    return 1;
  }
}

Workdir workdir_of(const StageContext& ctx) { return Workdir{ctx.config.paths.workdir}; }

void write_resolved_config(const StageContext& ctx) {
  jsonl::write_text(workdir_of(ctx).resolved_config(), config_to_json(ctx.config).dump(2) + "\n");
}

void require_artifact(const fs::path& path, const char* produced_by) {
  if (!fs::exists(path))
    throw Error(Errc::MissingArtifact, path.string() + " not found (run '" + produced_by + "' first)");
}

vecstore::EmbedOptions embed_options(const StageContext& ctx) {
  vecstore::EmbedOptions o;
  o.retry = ctx.config.providers.retry;
  o.sleeper = ctx.sleeper;
  o.batch_size = ctx.config.providers.embed_batch_size;
  o.max_in_flight = ctx.config.providers.max_in_flight;
  return o;
}

vecstore::VectorIndex build_and_save(vecstore::EmbeddingProvider& embedder, std::vector<corpus::Chunk> chunks,
                                     const fs::path& path, const vecstore::EmbedOptions& options) {
  std::vector<std::string> texts;
  texts.reserve(chunks.size());
  for (const auto& c : chunks) texts.push_back(c.text);
  const auto vectors = vecstore::embed_texts(embedder, texts, options);
  auto index = vecstore::build_index(std::move(chunks), vectors, embedder.tag());
  vecstore::save_index(index, path);
  return index;
}

vecstore::VectorIndex load_required_index(const fs::path& path) {
  require_artifact(path, "index");
  return vecstore::load_index(path);
}

std::vector<GenOutcome> read_outcomes(const fs::path& path) {
  std::vector<GenOutcome> out;
  jsonl::read(path, Errc::MalformedChunkFile, [&](const json& j) { out.push_back(j.get<GenOutcome>()); });
  return out;
}

}  // namespace

int cmd_ingest(StageContext& ctx) {
  return guarded(ctx, "ingest", [&] {
    const auto& c = ctx.config;
    const Workdir wd = workdir_of(ctx);
    const auto knowledge = corpus::load_document(c.paths.knowledge_blocks, corpus::DocumentRole::KnowledgeSource);
    const auto standards = corpus::load_document(c.paths.standards_blocks, corpus::DocumentRole::StandardsBlueprint);

    const auto recursive = corpus::chunk_recursive(knowledge, c.chunking.recursive);
    const auto structured = corpus::chunk_structure_aware(knowledge, c.chunking.structure);
    const auto rpt = corpus::chunk_rpt_standards(standards);

    write_resolved_config(ctx);
    corpus::write_chunks_jsonl(wd.knowledge_recursive_chunks(), recursive);
    corpus::write_chunks_jsonl(wd.knowledge_structure_chunks(), structured);
    corpus::write_standard_chunks_jsonl(wd.standards_chunks(), rpt);
    auto& out = out_of(ctx);
    out << fmt::format("ingest: knowledge/recursive {} chunks\n", recursive.size());
    out << fmt::format("ingest: knowledge/structure_aware {} chunks\n", structured.size());
    out << fmt::format("ingest: standards {} chunks\n", rpt.size());
  });
}

int cmd_index(StageContext& ctx) {
  return guarded(ctx, "index", [&] {
    const Workdir wd = workdir_of(ctx);
    require_artifact(wd.knowledge_recursive_chunks(), "ingest");
    require_artifact(wd.knowledge_structure_chunks(), "ingest");
    require_artifact(wd.standards_chunks(), "ingest");
    auto recursive = corpus::read_chunks_jsonl(wd.knowledge_recursive_chunks());
    auto structured = corpus::read_chunks_jsonl(wd.knowledge_structure_chunks());
    std::vector<corpus::Chunk> standards;
    for (auto& s : corpus::read_standard_chunks_jsonl(wd.standards_chunks())) standards.push_back(std::move(s.chunk));

    write_resolved_config(ctx);
    auto providers = make_providers(ctx.config, ctx.transport);
    const auto options = embed_options(ctx);
    auto& out = out_of(ctx);
    const auto a = build_and_save(*providers.embedder, std::move(recursive), wd.knowledge_recursive_index(), options);
    out << fmt::format("index: knowledge/recursive {} vectors\n", a.size());
    const auto b = build_and_save(*providers.embedder, std::move(structured), wd.knowledge_structure_index(), options);
    out << fmt::format("index: knowledge/structure_aware {} vectors\n", b.size());
    const auto s = build_and_save(*providers.embedder, std::move(standards), wd.standards_index(), options);
    out << fmt::format("index: standards {} vectors ({}, d={})\n", s.size(), s.provider_tag(), s.dimension());
  });
}

int cmd_generate(StageContext& ctx) {
  return guarded(ctx, "generate", [&] {
    const auto& c = ctx.config;
    const Workdir wd = workdir_of(ctx);
    require_artifact(wd.standards_chunks(), "ingest");
    generation::BatchPlan plan;
    plan.topic = c.generation.topic;
    plan.retrieval_k = c.generation.retrieval_k;
    for (const auto& s : corpus::read_standard_chunks_jsonl(wd.standards_chunks())) plan.standards.push_back(s.standard);

    std::optional<vecstore::VectorIndex> recursive_index, structure_index;
    for (Method m : c.generation.methods) {
      if (m == Method::RagGeneric && !recursive_index) recursive_index = load_required_index(wd.knowledge_recursive_index());
      if (m == Method::RagStructureAware && !structure_index)
        structure_index = load_required_index(wd.knowledge_structure_index());
    }

    std::optional<generation::PromptTemplates> custom;
    if (c.generation.prompts_dir) custom = generation::PromptTemplates::load_dir(*c.generation.prompts_dir);

    write_resolved_config(ctx);
    auto providers = make_providers(c, ctx.transport);
    generation::GenOptions options;
    options.temperature = c.generation.temperature;
    options.retry = c.providers.retry;
    options.sleeper = ctx.sleeper;
    options.max_in_flight = c.providers.max_in_flight;
    if (custom) options.templates = &*custom;

    for (Method m : c.generation.methods) {
      const vecstore::VectorIndex* index = nullptr;
      if (m == Method::RagGeneric) index = &*recursive_index;
      if (m == Method::RagStructureAware) index = &*structure_index;
      if (index && index->provider_tag() != providers.embedder->tag())
        throw Error(Errc::DimensionMismatch, "index built with " + index->provider_tag() + " but embedder is " +
                                                 providers.embedder->tag() + " (rerun 'index')");
      const auto outcomes = generation::generate_batch(*providers.chat, m, c.generation.n, plan, index,
                                                       generation::is_rag(m) ? providers.embedder.get() : nullptr,
                                                       options);
      std::vector<json> lines;
      std::size_t parsed = 0;
      for (const auto& o : outcomes) {
        lines.push_back(o);
        parsed += o.parsed() ? 1 : 0;
      }
      jsonl::write(wd.outcomes(m), lines);
      out_of(ctx) << fmt::format("generate: {} {} outcomes, {} parsed, {} parse failures\n", generation::to_string(m),
                                 outcomes.size(), parsed, outcomes.size() - parsed);
    }
  });
}

int cmd_evaluate(StageContext& ctx) {
  return guarded(ctx, "evaluate", [&] {
    const auto& c = ctx.config;
    const Workdir wd = workdir_of(ctx);
    require_artifact(wd.standards_chunks(), "ingest");
    const auto rpt_index = load_required_index(wd.standards_index());
    const auto standard_chunks = corpus::read_standard_chunks_jsonl(wd.standards_chunks());
    const auto standards = eval::standard_vectors(rpt_index, standard_chunks);

    std::vector<GenOutcome> outcomes;
    for (Method m : c.generation.methods) {
      require_artifact(wd.outcomes(m), "generate");
      auto batch = read_outcomes(wd.outcomes(m));
      if (batch.empty()) throw Error(Errc::EmptyBatch, wd.outcomes(m).string() + " holds no outcomes");
      for (auto& o : batch) {
        if (o.request.method != m)
          throw Error(Errc::CardinalityMismatch, "outcome " + o.id + " in " + wd.outcomes(m).string() +
                                                     " belongs to method " + std::string(to_string(o.request.method)));
        outcomes.push_back(std::move(o));
      }
    }

    write_resolved_config(ctx);
    auto providers = make_providers(c, ctx.transport);
    if (rpt_index.provider_tag() != providers.embedder->tag())
      throw Error(Errc::DimensionMismatch, "standards index built with " + rpt_index.provider_tag() +
                                               " but embedder is " + providers.embedder->tag() + " (rerun 'index')");
    eval::StsOptions sts;
    sts.unit = c.evaluation.sts_unit;
    sts.embed = embed_options(ctx);
    sts.embed.max_in_flight = 1;
    eval::ValidityParams validity;
    validity.tau = c.evaluation.tau;
    validity.k = c.evaluation.k;
    validity.refusal_markers = c.evaluation.refusal_markers;
    validity.embed = sts.embed;
    validity.retry = c.providers.retry;
    validity.sleeper = ctx.sleeper;

    const auto batch = eval::evaluate_outcomes(outcomes, standards, rpt_index, *providers.embedder, *providers.chat,
                                               sts, validity, c.providers.max_in_flight);
    std::size_t parsed = 0;
    for (const auto& o : outcomes) parsed += o.parsed() ? 1 : 0;
    if (batch.records.size() != parsed)
      throw Error(Errc::CardinalityMismatch, fmt::format("{} eval records for {} parsed outcomes",
                                                         batch.records.size(), parsed));

    for (Method m : c.generation.methods) {
      std::vector<json> lines;
      for (const auto& r : batch.records)
        if (r.method == m) lines.push_back(r);
      jsonl::write(wd.eval_records(m), lines);
    }
    const auto reports = eval::aggregate(outcomes, batch.alignments, batch.verdicts);
    eval::ReportMeta meta{c.evaluation.tau, c.evaluation.k, c.evaluation.sts_unit, providers.embedder->tag(),
                          providers.chat->tag()};
    jsonl::write_text(wd.report_md(), eval::render_report(reports, eval::ReportFormat::Markdown, meta));
    jsonl::write_text(wd.report_json(), eval::render_report(reports, eval::ReportFormat::Json));
    for (const auto& r : reports)
      out_of(ctx) << fmt::format("evaluate: {} sts {:.2f} (sd {:.2f}) validity {:.2f}% parse failures {:.2f}%\n",
                                 generation::to_string(r.method), r.mean_sts, r.std_sts, r.validity_pct,
                                 r.parse_failure_pct);
  });
}

int cmd_report(StageContext& ctx) {
  return guarded(ctx, "report", [&] {
    const Workdir wd = workdir_of(ctx);
    const fs::path path = ctx.config.report.format == eval::ReportFormat::Json ? wd.report_json() : wd.report_md();
    require_artifact(path, "evaluate");
    out_of(ctx) << jsonl::read_text(path);
  });
}

int cmd_run_all(StageContext& ctx) {
  for (auto* stage : {&cmd_ingest, &cmd_index, &cmd_generate, &cmd_evaluate})
    if (const int code = stage(ctx); code != kExitOk) return code;
  out_of(ctx) << "run-all: report written to " << workdir_of(ctx).report_md().string() << "\n";
  return kExitOk;
}

}  // namespace qgen::pipeline
