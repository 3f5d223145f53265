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

#include "qgen/corpus/types.hpp"

#include <charconv>
#include <cstdio>

#include "qgen/error.hpp"

namespace qgen::corpus {

std::string_view to_string(DocumentRole role) {
  return role == DocumentRole::KnowledgeSource ? "knowledge" : "standards";
}

std::size_t SourceDocument::block_count() const {
  std::size_t n = 0;
  for (const auto& page : pages) n += page.blocks.size();
  return n;
}

std::vector<const Block*> SourceDocument::blocks() const {
  std::vector<const Block*> out;
  out.reserve(block_count());
  for (const auto& page : pages)
    for (const auto& block : page.blocks) out.push_back(&block);
  return out;
}

std::string_view to_string(ChunkStrategy strategy) {
  switch (strategy) {
    case ChunkStrategy::Recursive: return "recursive";
    case ChunkStrategy::StructureAware: return "structure_aware";
    case ChunkStrategy::StandardSplit: return "standard_split";
  }
  return "recursive";
}

std::string_view short_tag(ChunkStrategy strategy) {
  switch (strategy) {
    case ChunkStrategy::Recursive: return "rec";
    case ChunkStrategy::StructureAware: return "sa";
    case ChunkStrategy::StandardSplit: return "std";
  }
  return "rec";
}

ChunkStrategy chunk_strategy_from_string(std::string_view name) {
  if (name == "recursive") return ChunkStrategy::Recursive;
  if (name == "structure_aware") return ChunkStrategy::StructureAware;
  if (name == "standard_split") return ChunkStrategy::StandardSplit;
  throw Error(Errc::MalformedChunkFile, "unknown chunk strategy '" + std::string(name) + "'");
}

std::string make_chunk_id(std::string_view doc_id, ChunkStrategy strategy, std::size_t ordinal) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%05zu", ordinal);
  std::string id(doc_id);
  id += '/';
  id += short_tag(strategy);
  id += '/';
  id += buf;
  return id;
}

bool standard_code_less(std::string_view a, std::string_view b) {
  auto next = [](std::string_view& s, long& value) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc()) value = -1;
    s.remove_prefix(static_cast<std::size_t>(ptr - begin));
    if (!s.empty() && s.front() == '.') s.remove_prefix(1);
  };
  while (!a.empty() || !b.empty()) {
    if (a.empty()) return true;
    if (b.empty()) return false;
    long va = 0, vb = 0;
    std::string_view ra = a, rb = b;
    next(ra, va);
    next(rb, vb);
    if (va != vb) return va < vb;
    if (ra.size() == a.size() || rb.size() == b.size()) return a < b;  // non-numeric
    a = ra;
    b = rb;
  }
  return false;
}

void to_json(nlohmann::json& j, const CharSpan& span) { j = nlohmann::json::array({span.start, span.end}); }

void from_json(const nlohmann::json& j, CharSpan& span) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::MalformedChunkFile, "char_span must be [start, end]");
  span.start = j.at(0).get<std::size_t>();
  span.end = j.at(1).get<std::size_t>();
}

void to_json(nlohmann::json& j, const Chunk& chunk) {
  j = nlohmann::json{{"chunk_id", chunk.chunk_id},
                     {"doc_id", chunk.doc_id},
                     {"text", chunk.text},
                     {"char_span", nullptr},
                     {"source_blocks", nullptr},
                     {"strategy", to_string(chunk.strategy)}};
  if (chunk.char_span) j["char_span"] = *chunk.char_span;
  if (chunk.source_blocks) j["source_blocks"] = *chunk.source_blocks;
}

void from_json(const nlohmann::json& j, Chunk& chunk) {
  chunk.chunk_id = j.at("chunk_id").get<std::string>();
  chunk.doc_id = j.at("doc_id").get<std::string>();
  chunk.text = j.at("text").get<std::string>();
  chunk.strategy = chunk_strategy_from_string(j.at("strategy").get<std::string>());
  chunk.char_span.reset();
  chunk.source_blocks.reset();
  if (auto it = j.find("char_span"); it != j.end() && !it->is_null()) chunk.char_span = it->get<CharSpan>();
  if (auto it = j.find("source_blocks"); it != j.end() && !it->is_null())
    chunk.source_blocks = it->get<std::vector<std::size_t>>();
  if (chunk.chunk_id.empty()) throw Error(Errc::MalformedChunkFile, "empty chunk_id");
  if (chunk.text.empty()) throw Error(Errc::MalformedChunkFile, "empty text in chunk " + chunk.chunk_id);
}

void to_json(nlohmann::json& j, const LearningStandard& standard) {
  j = nlohmann::json{{"code", standard.code}, {"description", standard.description}};
}

void from_json(const nlohmann::json& j, LearningStandard& standard) {
  standard.code = j.at("code").get<std::string>();
  standard.description = j.at("description").get<std::string>();
}

}  // namespace qgen::corpus
