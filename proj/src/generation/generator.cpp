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

#include "qgen/generation/generator.hpp"

#include <cstdio>

#include "qgen/error.hpp"
#include "qgen/parallel.hpp"
#include "qgen/text_util.hpp"

namespace qgen::generation {

using nlohmann::json;

std::string_view to_string(Method method) {
  switch (method) {
    case Method::StructuredPrompt: return "structured_prompt";
    case Method::BasicPrompt: return "basic_prompt";
    case Method::RagGeneric: return "rag_generic";
    case Method::RagStructureAware: return "rag_structure";
  }
  return "basic_prompt";
}

Method method_from_string(std::string_view name) {
  for (Method m : kAllMethods)
    if (to_string(m) == name) return m;
  throw Error(Errc::InvalidRequest, "unknown method '" + std::string(name) +
                                        "' (expected structured_prompt, basic_prompt, rag_generic or rag_structure)");
}

std::string_view display_name(Method method) {
  switch (method) {
    case Method::StructuredPrompt: return "Method 1: Structured Prompt";
    case Method::BasicPrompt: return "Method 2: Basic Prompt";
    case Method::RagGeneric: return "Method 3: Generic RAG";
    case Method::RagStructureAware: return "Method 4: Manual RAG";
  }
  return "";
}

bool is_rag(Method method) { return method == Method::RagGeneric || method == Method::RagStructureAware; }

void validate(const GenRequest& request) {
  if (!text::has_non_space(request.topic)) throw Error(Errc::EmptyTopic, "request topic is empty");
  if (is_rag(request.method) != request.retrieval_k.has_value())
    throw Error(Errc::InvalidRequest, std::string("retrieval_k must be set exactly for RAG methods (method ") +
                                          std::string(to_string(request.method)) + ")");
  if (request.retrieval_k && *request.retrieval_k == 0) throw Error(Errc::InvalidRequest, "retrieval_k must be positive");
}

std::string outcome_id(Method method, std::size_t ordinal) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "-%04zu", ordinal);
  return std::string(to_string(method)) + buf;
}

std::string retrieval_query(const GenRequest& request) {
  std::string q(text::trim(request.topic));
  if (request.target_standard && text::has_non_space(request.target_standard->description)) {
    q += ' ';
    q += text::trim(request.target_standard->description);
  }
  return q;
}

void to_json(json& j, const GenRequest& r) {
  j = json{{"method", to_string(r.method)},
           {"topic", r.topic},
           {"target_standard", nullptr},
           {"retrieval_k", nullptr},
           {"seed_hint", nullptr}};
  if (r.target_standard) j["target_standard"] = *r.target_standard;
  if (r.retrieval_k) j["retrieval_k"] = *r.retrieval_k;
  if (r.seed_hint) j["seed_hint"] = *r.seed_hint;
}

void from_json(const json& j, GenRequest& r) {
  r.method = method_from_string(j.at("method").get<std::string>());
  r.topic = j.at("topic").get<std::string>();
  r.target_standard.reset();
  r.retrieval_k.reset();
  r.seed_hint.reset();
  if (const auto& v = j.at("target_standard"); !v.is_null()) r.target_standard = v.get<corpus::LearningStandard>();
  if (const auto& v = j.at("retrieval_k"); !v.is_null()) r.retrieval_k = v.get<std::size_t>();
  if (const auto& v = j.at("seed_hint"); !v.is_null()) r.seed_hint = v.get<std::int64_t>();
}

void to_json(json& j, const GenOutcome& o) {
  j = json{{"id", o.id},
           {"request", o.request},
           {"status", o.parsed() ? "parsed" : "parse_failure"},
           {"mcq", nullptr},
           {"failure", nullptr},
           {"retrieved_chunk_ids", o.retrieved_chunk_ids},
           {"retrieval_scores", o.retrieval_scores},
           {"query_text", o.query_text},
           {"prompt_fingerprint", o.prompt_fingerprint},
           {"provider_tag", o.provider_tag},
           {"embedder_tag", o.embedder_tag}};
  if (const Mcq* m = o.mcq()) j["mcq"] = *m;
  if (const ParseFailure* f = o.failure()) j["failure"] = *f;
}

void from_json(const json& j, GenOutcome& o) {
  o.id = j.at("id").get<std::string>();
  o.request = j.at("request").get<GenRequest>();
  const auto status = j.at("status").get<std::string>();
  if (status == "parsed")
    o.result = j.at("mcq").get<Mcq>();
  else if (status == "parse_failure")
    o.result = j.at("failure").get<ParseFailure>();
  else
    throw Error(Errc::InvalidRequest, "unknown outcome status '" + status + "'");
  o.retrieved_chunk_ids = j.at("retrieved_chunk_ids").get<std::vector<std::string>>();
  o.retrieval_scores = j.value("retrieval_scores", std::vector<double>{});
  o.query_text = j.value("query_text", std::string());
  o.prompt_fingerprint = j.at("prompt_fingerprint").get<std::string>();
  o.provider_tag = j.at("provider_tag").get<std::string>();
  o.embedder_tag = j.value("embedder_tag", std::string());
}

GenOutcome generate_mcq(providers::ChatProvider& chat, const GenRequest& request, const vecstore::VectorIndex* index,
                        vecstore::EmbeddingProvider* embedder, const GenOptions& options) {
  validate(request);
  const PromptTemplates& templates = options.templates ? *options.templates : PromptTemplates::builtin();

  GenOutcome outcome;
  outcome.request = request;
  outcome.provider_tag = chat.tag();

  PromptBundle prompt;
  switch (request.method) {
    case Method::StructuredPrompt:
      if (!chat.supports_schema())
        throw Error(Errc::UnsupportedCapability, chat.tag() + " has no schema-constrained mode");
      prompt = build_prompt_structured(request.topic, templates);
      break;
    case Method::BasicPrompt:
      prompt = build_prompt_basic(request.topic, templates);
      break;
    case Method::RagGeneric:
    case Method::RagStructureAware: {
      if (index == nullptr) throw Error(Errc::MissingIndex, std::string(to_string(request.method)) + " needs an index");
      if (embedder == nullptr)
        throw Error(Errc::MissingEmbedder, std::string(to_string(request.method)) + " needs an embedder");
      outcome.query_text = retrieval_query(request);
      outcome.embedder_tag = embedder->tag();
      vecstore::EmbedOptions eo;
      eo.retry = options.retry;
      eo.sleeper = options.sleeper;
      eo.max_in_flight = 1;
      const auto query = vecstore::embed_one(*embedder, outcome.query_text, eo);
      const auto hits = vecstore::top_k(*index, query, *request.retrieval_k);
      std::vector<corpus::Chunk> context;
      for (const auto& h : hits) {
        outcome.retrieved_chunk_ids.push_back(h.chunk_id);
        outcome.retrieval_scores.push_back(h.score);
        context.push_back(*index->find(h.chunk_id));
      }
      prompt = build_prompt_rag(request.topic, context, templates);
      break;
    }
  }
  outcome.prompt_fingerprint = prompt.fingerprint();

  providers::ChatRequest chat_request;
  chat_request.messages = {{"system", prompt.system}, {"user", prompt.user}};
  chat_request.response_schema = prompt.schema;
  chat_request.temperature = options.temperature;
  chat_request.seed = request.seed_hint;
  chat_request.task = providers::ChatTask::Generate;

  const auto reply = providers::with_retry(options.retry, options.sleeper, [&] { return chat.complete(chat_request); });
  auto parsed = parse_mcq_json(reply.text);
  if (auto* m = std::get_if<Mcq>(&parsed)) {
    outcome.result = std::move(*m);
  } else {
    outcome.result = std::move(std::get<ParseFailure>(parsed));
  }
  return outcome;
}

std::vector<GenOutcome> generate_batch(providers::ChatProvider& chat, Method method, std::size_t n,
                                       const BatchPlan& plan, const vecstore::VectorIndex* index,
                                       vecstore::EmbeddingProvider* embedder, const GenOptions& options) {
  if (n == 0) throw Error(Errc::InvalidRequest, "batch size must be positive");
  return bounded_map(n, options.max_in_flight, [&](std::size_t i) {
    GenRequest request;
    request.method = method;
    request.topic = plan.topic;
    if (!plan.standards.empty()) request.target_standard = plan.standards[i % plan.standards.size()];
    if (is_rag(method)) request.retrieval_k = plan.retrieval_k;
    request.seed_hint = static_cast<std::int64_t>(i);
    GenOutcome outcome = generate_mcq(chat, request, index, embedder, options);
    outcome.id = outcome_id(method, i);
    return outcome;
  });
}

}  // namespace qgen::generation
