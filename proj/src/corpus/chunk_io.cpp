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

#include "qgen/corpus/chunk_io.hpp"

#include <fstream>
#include <functional>
#include <string>

#include "qgen/error.hpp"
#include "qgen/jsonl.hpp"

namespace qgen::corpus {

using nlohmann::json;

void write_chunks_jsonl(const std::filesystem::path& path, const std::vector<Chunk>& chunks) {
  std::vector<json> lines;
  lines.reserve(chunks.size());
  for (const auto& c : chunks) lines.emplace_back(c);
  jsonl::write(path, lines);
}

std::vector<Chunk> read_chunks_jsonl(const std::filesystem::path& path) {
  std::vector<Chunk> out;
  jsonl::read(path, Errc::MalformedChunkFile, [&](const json& j) { out.push_back(j.get<Chunk>()); });
  return out;
}

void write_standard_chunks_jsonl(const std::filesystem::path& path, const std::vector<StandardChunk>& chunks) {
  std::vector<json> lines;
  lines.reserve(chunks.size());
  for (const auto& sc : chunks) {
    json j = sc.chunk;
    j["standard"] = sc.standard;
    lines.push_back(std::move(j));
  }
  jsonl::write(path, lines);
}

std::vector<StandardChunk> read_standard_chunks_jsonl(const std::filesystem::path& path) {
  std::vector<StandardChunk> out;
  jsonl::read(path, Errc::MalformedChunkFile, [&](const json& j) {
    StandardChunk sc;
    sc.chunk = j.get<Chunk>();
    sc.standard = j.at("standard").get<LearningStandard>();
    out.push_back(std::move(sc));
  });
  return out;
}

}  // namespace qgen::corpus
