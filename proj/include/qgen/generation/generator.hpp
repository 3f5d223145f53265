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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgen/corpus/types.hpp"
#include "qgen/generation/mcq.hpp"
#include "qgen/generation/prompts.hpp"
#include "qgen/providers/chat.hpp"
#include "qgen/providers/retry.hpp"
#include "qgen/vecstore/embedding.hpp"
#include "qgen/vecstore/index.hpp"

namespace qgen::generation {

enum class Method { StructuredPrompt, BasicPrompt, RagGeneric, RagStructureAware };

inline constexpr std::array<Method, 4> kAllMethods{Method::StructuredPrompt, Method::BasicPrompt, Method::RagGeneric,
                                                   Method::RagStructureAware};

/// Short names: structured_prompt, basic_prompt, rag_generic, rag_structure.
std::string_view to_string(Method method);
Method method_from_string(std::string_view name);
/// Report label, e.g. "Method 4: Manual RAG".
std::string_view display_name(Method method);
bool is_rag(Method method);

struct GenRequest {
  Method method = Method::BasicPrompt;
  std::string topic;
  std::optional<corpus::LearningStandard> target_standard;
  /// Present iff the method is a RAG method.
  std::optional<std::size_t> retrieval_k;
  std::optional<std::int64_t> seed_hint;
};

/// Throws InvalidRequest / EmptyTopic when the request breaks its invariants.
void validate(const GenRequest& request);

struct GenOutcome {
  std::string id;
  GenRequest request;
  std::variant<Mcq, ParseFailure> result;
  std::vector<std::string> retrieved_chunk_ids;
  std::vector<double> retrieval_scores;
  /// Text embedded for retrieval (topic + standard description); empty for
  /// non-RAG methods.
  std::string query_text;
  std::string prompt_fingerprint;
  std::string provider_tag;
  std::string embedder_tag;

  bool parsed() const { return std::holds_alternative<Mcq>(result); }
  const Mcq* mcq() const { return std::get_if<Mcq>(&result); }
  const ParseFailure* failure() const { return std::get_if<ParseFailure>(&result); }
};

void to_json(nlohmann::json& j, const GenRequest& request);
void from_json(const nlohmann::json& j, GenRequest& request);
void to_json(nlohmann::json& j, const GenOutcome& outcome);
void from_json(const nlohmann::json& j, GenOutcome& outcome);

std::string outcome_id(Method method, std::size_t ordinal);

struct GenOptions {
  double temperature = 0.7;
  providers::RetryPolicy retry{};
  providers::Sleeper sleeper = providers::real_sleeper();
  std::size_t max_in_flight = 4;
  const PromptTemplates* templates = &PromptTemplates::builtin();
};

/// Query used for retrieval: topic, then the target standard's description.
std::string retrieval_query(const GenRequest& request);

/// Runs one generation. RAG methods embed the retrieval query, take the
/// top-k chunks of `index` and ground the prompt in them; StructuredPrompt
/// uses schema-constrained completion; BasicPrompt parses free text. Model
/// text never raises: unparseable replies become ParseFailure. Throws
/// ProviderError (after retries), MissingIndex / MissingEmbedder for RAG
/// requests without them, UnsupportedCapability when StructuredPrompt meets a
/// provider without schema mode.
GenOutcome generate_mcq(providers::ChatProvider& chat, const GenRequest& request, const vecstore::VectorIndex* index,
                        vecstore::EmbeddingProvider* embedder, const GenOptions& options = {});

struct BatchPlan {
  std::string topic;
  /// Targets cycle round-robin through this list; may be empty.
  std::vector<corpus::LearningStandard> standards;
  std::size_t retrieval_k = 3;
};

/// Exactly n outcomes in request order. Request i targets
/// standards[i % standards.size()] and carries seed_hint i. Requests run
/// concurrently up to options.max_in_flight.
std::vector<GenOutcome> generate_batch(providers::ChatProvider& chat, Method method, std::size_t n,
                                       const BatchPlan& plan, const vecstore::VectorIndex* index,
                                       vecstore::EmbeddingProvider* embedder, const GenOptions& options = {});

}  // namespace qgen::generation
