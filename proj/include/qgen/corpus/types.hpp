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
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace qgen::corpus {

enum class DocumentRole { KnowledgeSource, StandardsBlueprint };

std::string_view to_string(DocumentRole role);

/// One layout block from an extracted page. bbox is [x0, y0, x1, y1] in page
/// units with x0 < x1 and y0 < y1.
struct Block {
  std::string text;
  int page = 0;
  std::array<double, 4> bbox{};
  double font_size = 0.0;
  std::optional<std::string> font_name;
};

struct Page {
  int number = 0;
  std::vector<Block> blocks;
};

struct SourceDocument {
  std::string doc_id;
  DocumentRole role = DocumentRole::KnowledgeSource;
  std::vector<Page> pages;

  std::size_t block_count() const;
  /// Blocks of every page in reading order; indices match Chunk::source_blocks.
  std::vector<const Block*> blocks() const;
};

enum class ChunkStrategy { Recursive, StructureAware, StandardSplit };

std::string_view to_string(ChunkStrategy strategy);
std::string_view short_tag(ChunkStrategy strategy);
ChunkStrategy chunk_strategy_from_string(std::string_view name);

/// Half-open byte range into the flattened document text.
struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

struct Chunk {
  std::string chunk_id;
  std::string doc_id;
  std::string text;
  std::optional<CharSpan> char_span;
  std::optional<std::vector<std::size_t>> source_blocks;
  ChunkStrategy strategy = ChunkStrategy::Recursive;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

/// Deterministic id: "<doc_id>/<strategy tag>/<5-digit ordinal>".
std::string make_chunk_id(std::string_view doc_id, ChunkStrategy strategy, std::size_t ordinal);

/// A numbered learning standard, e.g. code "1.2.1".
struct LearningStandard {
  std::string code;
  std::string description;

  friend bool operator==(const LearningStandard&, const LearningStandard&) = default;
};

/// Numeric, component-wise ordering of standard codes ("1.2.9" < "1.2.10").
bool standard_code_less(std::string_view a, std::string_view b);

struct StandardChunk {
  LearningStandard standard;
  Chunk chunk;

  friend bool operator==(const StandardChunk&, const StandardChunk&) = default;
};

void to_json(nlohmann::json& j, const CharSpan& span);
void from_json(const nlohmann::json& j, CharSpan& span);
void to_json(nlohmann::json& j, const Chunk& chunk);
void from_json(const nlohmann::json& j, Chunk& chunk);
void to_json(nlohmann::json& j, const LearningStandard& standard);
void from_json(const nlohmann::json& j, LearningStandard& standard);

}  // namespace qgen::corpus
