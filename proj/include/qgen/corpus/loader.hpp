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
#include <string>
#include <string_view>
#include <vector>

#include "qgen/corpus/types.hpp"

namespace qgen::corpus {

/// Reads a Blocks-JSON file:
///
///   {"doc_id": str, "role": "knowledge"|"standards",
///    "pages": [{"page": int, "blocks": [{"text": str, "bbox": [x0,y0,x1,y1],
///                                        "font_size": f, "font_name": str?}]}]}
///
/// Block text is whitespace-normalized on load. The file's role must equal
/// `role`. Throws Error with FileNotFound, MalformedBlocksFile (diagnostic
/// names the line/column or the offending field path) or EmptyDocument.
SourceDocument load_document(const std::filesystem::path& path, DocumentRole role);

/// Same as load_document but from an in-memory JSON string; `origin` is used
/// in diagnostics.
SourceDocument parse_document(std::string_view json_text, DocumentRole role,
                              std::string_view origin = "<memory>");

/// Flattened text of a document: blocks on a page joined by "\n", pages
/// joined by "\n\n". block_spans[i] is block i's byte range in `text`.
struct FlatText {
  std::string text;
  std::vector<CharSpan> block_spans;
};

FlatText flatten(const SourceDocument& doc);

}  // namespace qgen::corpus
