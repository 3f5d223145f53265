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
#include <vector>

#include "qgen/corpus/types.hpp"

namespace qgen::corpus {

// JSONL persistence: one Chunk object per line. Standard chunks carry an extra
// "standard": {"code", "description"} member. Readers report the 1-based line
// number of the first bad line as Errc::MalformedChunkFile.

void write_chunks_jsonl(const std::filesystem::path& path, const std::vector<Chunk>& chunks);
std::vector<Chunk> read_chunks_jsonl(const std::filesystem::path& path);

void write_standard_chunks_jsonl(const std::filesystem::path& path, const std::vector<StandardChunk>& chunks);
std::vector<StandardChunk> read_standard_chunks_jsonl(const std::filesystem::path& path);

}  // namespace qgen::corpus
