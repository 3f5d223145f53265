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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/corpus/types.hpp"

namespace qgen::corpus {

struct RecursiveParams {
  std::size_t max_chars = 1000;
  std::size_t overlap = 200;
  /// Split separator-free tokens longer than max_chars at code-point
  /// boundaries instead of emitting them whole.
  bool hard_split = false;
};

/// Generic splitter over the flattened document text. Separators are tried in
/// priority order: "\n\n", "\n", sentence end ([.?!] + space), " ", and, only
/// with hard_split, any code point. Lengths are counted in code points; spans
/// are byte offsets into flatten(doc).text and chunk text is exactly that
/// substring, so the chunks cover the whole text.
std::vector<Chunk> chunk_recursive(const SourceDocument& doc, const RecursiveParams& params);

/// Same algorithm on a bare string, for callers without a SourceDocument.
std::vector<Chunk> chunk_text_recursive(std::string_view text, std::string_view doc_id,
                                        const RecursiveParams& params);

std::vector<std::string> default_unit_keywords();

struct StructureParams {
  double heading_font_delta = 3.0;
  std::size_t max_chars = 1500;
  std::vector<std::string> keywords = default_unit_keywords();
};

/// Groups blocks in reading order. A new chunk starts at a heading (font size
/// at least heading_font_delta above the document median), at a block opening
/// with a unit keyword, or when the block would push the chunk past max_chars
/// and the chunk is not a keyword-opened unit. Every block lands in exactly
/// one chunk; keyword-opened units are never split.
std::vector<Chunk> chunk_structure_aware(const SourceDocument& doc, const StructureParams& params);

double median_font_size(const SourceDocument& doc);

/// Splits a standards blueprint at learning-standard codes (N.N.N at a line
/// start). Each chunk runs from its code to the byte before the next code.
std::vector<StandardChunk> chunk_rpt_standards(const SourceDocument& doc);

}  // namespace qgen::corpus
