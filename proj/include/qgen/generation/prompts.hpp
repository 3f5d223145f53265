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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgen/corpus/types.hpp"

namespace qgen::generation {

/// Prompt text files shipped under resources/prompts/<version>/.
struct PromptTemplates {
  std::string version;
  std::string generate_system;
  std::string structured_user;
  std::string basic_user;
  std::string rag_user;
  std::string qa_system;
  std::string qa_user;

  /// Templates compiled into the binary.
  static const PromptTemplates& builtin();
  /// Reads the six .txt files from `dir`. Throws FileNotFound.
  static PromptTemplates load_dir(const std::filesystem::path& dir);
};

struct PromptBundle {
  std::string system;
  std::string user;
  /// Present only for schema-constrained generation.
  std::optional<nlohmann::json> schema;

  /// FNV-1a 64 (hex) over system, user and the schema dump.
  std::string fingerprint() const;
};

/// Single-pass substitution of {name} placeholders found in `vars`; unknown
/// braces are copied through, and substituted values are not rescanned.
std::string render_template(std::string_view tpl, const std::map<std::string, std::string>& vars);

/// JSON schema of the Mcq reply used in schema-constrained mode.
nlohmann::json mcq_response_schema();

inline constexpr std::string_view kContextOpen = "<<<KONTEKS id=";
inline constexpr std::string_view kContextClose = "<<<TAMAT KONTEKS>>>";

/// Context blocks in the given order:
///   <<<KONTEKS id=CHUNK_ID>>>
///   chunk text
///   <<<TAMAT KONTEKS>>>
std::string render_context(std::span<const corpus::Chunk> context);

/// (chunk_id, text) pairs recovered from a rendered prompt.
std::vector<std::pair<std::string, std::string>> extract_context_blocks(std::string_view prompt);

/// Throws Error(EmptyTopic).
PromptBundle build_prompt_structured(std::string_view topic,
                                     const PromptTemplates& templates = PromptTemplates::builtin());
PromptBundle build_prompt_basic(std::string_view topic, const PromptTemplates& templates = PromptTemplates::builtin());

/// `context` must already be in descending retrieval-score order. Throws
/// EmptyTopic or EmptyContext.
PromptBundle build_prompt_rag(std::string_view topic, std::span<const corpus::Chunk> context,
                              const PromptTemplates& templates = PromptTemplates::builtin());

/// Question-answering prompt over retrieved standards. Throws EmptyContext.
PromptBundle build_prompt_qa(std::string_view question, std::span<const corpus::Chunk> context,
                             const PromptTemplates& templates = PromptTemplates::builtin());

}  // namespace qgen::generation
