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

#include "qgen/generation/prompts.hpp"

#include "qgen/error.hpp"
#include "qgen/jsonl.hpp"
#include "qgen/text_util.hpp"

namespace qgen::generation {

// Defined in the build-generated prompt_resources.cpp.
PromptTemplates builtin_prompt_templates();

using nlohmann::json;

const PromptTemplates& PromptTemplates::builtin() {
  static const PromptTemplates templates = builtin_prompt_templates();
  return templates;
}

PromptTemplates PromptTemplates::load_dir(const std::filesystem::path& dir) {
  PromptTemplates t;
  t.version = dir.filename().string();
  t.generate_system = jsonl::read_text(dir / "generate_system.txt");
  t.structured_user = jsonl::read_text(dir / "structured_user.txt");
  t.basic_user = jsonl::read_text(dir / "basic_user.txt");
  t.rag_user = jsonl::read_text(dir / "rag_user.txt");
  t.qa_system = jsonl::read_text(dir / "qa_system.txt");
  t.qa_user = jsonl::read_text(dir / "qa_user.txt");
  return t;
}

std::string PromptBundle::fingerprint() const {
  std::string material = system;
  material += '\x1f';
  material += user;
  material += '\x1f';
  if (schema) material += schema->dump();
  return text::hex64(text::fnv1a64(material));
}

std::string render_template(std::string_view tpl, const std::map<std::string, std::string>& vars) {
  std::string out;
  out.reserve(tpl.size());
  for (std::size_t i = 0; i < tpl.size(); ++i) {
    if (tpl[i] == '{') {
      const auto close = tpl.find('}', i + 1);
      if (close != std::string_view::npos) {
        auto it = vars.find(std::string(tpl.substr(i + 1, close - i - 1)));
        if (it != vars.end()) {
          out += it->second;
          i = close;
          continue;
        }
      }
    }
    out += tpl[i];
  }
  return std::string(text::trim(out));
}

json mcq_response_schema() {
  const json labels = {"A", "B", "C", "D"};
  return json{
      {"type", "object"},
      {"properties",
       {{"stem", {{"type", "string"}}},
        {"options",
         {{"type", "array"},
          {"minItems", 4},
          {"maxItems", 4},
          {"items",
           {{"type", "object"},
            {"properties", {{"label", {{"type", "string"}, {"enum", labels}}}, {"text", {{"type", "string"}}}}},
            {"required", {"label", "text"}},
            {"additionalProperties", false}}}}},
        {"answer_key", {{"type", "string"}, {"enum", labels}}},
        {"explanation", {{"type", "string"}}}}},
      {"required", {"stem", "options", "answer_key", "explanation"}},
      {"additionalProperties", false}};
}

std::string render_context(std::span<const corpus::Chunk> context) {
  std::string out;
  for (std::size_t i = 0; i < context.size(); ++i) {
    if (i > 0) out += "\n\n";
    out += kContextOpen;
    out += context[i].chunk_id;
    out += ">>>\n";
    out += context[i].text;
    out += '\n';
    out += kContextClose;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> extract_context_blocks(std::string_view prompt) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  for (;;) {
    const auto open = prompt.find(kContextOpen, pos);
    if (open == std::string_view::npos) break;
    const auto id_start = open + kContextOpen.size();
    const auto id_end = prompt.find(">>>\n", id_start);
    if (id_end == std::string_view::npos) break;
    const auto body_start = id_end + 4;
    const auto close = prompt.find(std::string("\n") + std::string(kContextClose), body_start);
    if (close == std::string_view::npos) break;
    out.emplace_back(std::string(prompt.substr(id_start, id_end - id_start)),
                     std::string(prompt.substr(body_start, close - body_start)));
    pos = close + 1 + kContextClose.size();
  }
  return out;
}

namespace {

void require_topic(std::string_view topic) {
  if (!text::has_non_space(topic)) throw Error(Errc::EmptyTopic, "topic must not be empty");
}

}  // namespace

PromptBundle build_prompt_structured(std::string_view topic, const PromptTemplates& templates) {
  require_topic(topic);
  return {std::string(text::trim(templates.generate_system)),
          render_template(templates.structured_user, {{"topic", std::string(text::trim(topic))}}),
          mcq_response_schema()};
}

PromptBundle build_prompt_basic(std::string_view topic, const PromptTemplates& templates) {
  require_topic(topic);
  return {std::string(text::trim(templates.generate_system)),
          render_template(templates.basic_user, {{"topic", std::string(text::trim(topic))}}), std::nullopt};
}

PromptBundle build_prompt_rag(std::string_view topic, std::span<const corpus::Chunk> context,
                              const PromptTemplates& templates) {
  require_topic(topic);
  if (context.empty()) throw Error(Errc::EmptyContext, "RAG prompt needs at least one context chunk");
  return {std::string(text::trim(templates.generate_system)),
          render_template(templates.rag_user,
                          {{"topic", std::string(text::trim(topic))}, {"context", render_context(context)}}),
          std::nullopt};
}

PromptBundle build_prompt_qa(std::string_view question, std::span<const corpus::Chunk> context,
                             const PromptTemplates& templates) {
  if (context.empty()) throw Error(Errc::EmptyContext, "QA prompt needs at least one context chunk");
  return {std::string(text::trim(templates.qa_system)),
          render_template(templates.qa_user,
                          {{"question", std::string(text::trim(question))}, {"context", render_context(context)}}),
          std::nullopt};
}

}  // namespace qgen::generation
