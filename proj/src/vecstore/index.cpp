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

#include "qgen/vecstore/index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qgen/error.hpp"
#include "qgen/jsonl.hpp"
#include "qgen/simd/dot.hpp"
#include "qgen/text_util.hpp"

namespace qgen::vecstore {

using nlohmann::json;

std::span<const double> VectorIndex::row(std::size_t i) const {
  return std::span<const double>(matrix_).subspan(i * dimension_, dimension_);
}

EmbeddingVector VectorIndex::vector(std::size_t i) const {
  const auto r = row(i);
  return EmbeddingVector(std::vector<double>(r.begin(), r.end()));
}

const corpus::Chunk* VectorIndex::find(std::string_view chunk_id) const {
  auto it = by_id_.find(std::string(chunk_id));
  return it == by_id_.end() ? nullptr : &chunks_[it->second];
}

bool operator==(const VectorIndex& a, const VectorIndex& b) {
  return a.dimension_ == b.dimension_ && a.provider_tag_ == b.provider_tag_ && a.chunks_ == b.chunks_ &&
         a.matrix_ == b.matrix_;
}

void VectorIndex::add(corpus::Chunk chunk, std::span<const double> unit_row) {
  if (!by_id_.emplace(chunk.chunk_id, chunks_.size()).second)
    throw Error(Errc::DuplicateChunkId, chunk.chunk_id);
  matrix_.insert(matrix_.end(), unit_row.begin(), unit_row.end());
  chunks_.push_back(std::move(chunk));
}

VectorIndex build_index(std::vector<corpus::Chunk> chunks, const std::vector<EmbeddingVector>& vectors,
                        std::string provider_tag) {
  if (chunks.empty() && vectors.empty()) throw Error(Errc::EmptyIndex, "no chunks");
  if (chunks.size() != vectors.size())
    throw Error(Errc::LengthMismatch,
                std::to_string(chunks.size()) + " chunks vs " + std::to_string(vectors.size()) + " vectors");

  VectorIndex index;
  index.dimension_ = vectors.front().dimension();
  index.provider_tag_ = std::move(provider_tag);
  index.matrix_.reserve(index.dimension_ * vectors.size());
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    if (vectors[i].dimension() != index.dimension_)
      throw Error(Errc::DimensionMismatch, "vector " + std::to_string(i) + " has dimension " +
                                               std::to_string(vectors[i].dimension()) + ", index has " +
                                               std::to_string(index.dimension_));
    const EmbeddingVector unit = vectors[i].normalized();
    index.add(std::move(chunks[i]), unit.values());
  }
  return index;
}

std::vector<ScoredHit> top_k(const VectorIndex& index, const EmbeddingVector& query, std::size_t k) {
  if (k == 0) throw Error(Errc::InvalidRequest, "k must be positive");
  if (query.dimension() != index.dimension())
    throw Error(Errc::DimensionMismatch, "query dimension " + std::to_string(query.dimension()) +
                                             ", index dimension " + std::to_string(index.dimension()));
  const EmbeddingVector unit = query.normalized();

  std::vector<double> scores(index.size());
  simd::dot_rows(index.matrix_, index.dimension_, unit.values(), scores);
  for (double& s : scores) s = std::clamp(s, -1.0, 1.0);

  std::vector<std::size_t> order(index.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t take = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (scores[a] != scores[b]) return scores[a] > scores[b];
                      return index.chunks_[a].chunk_id < index.chunks_[b].chunk_id;
                    });

  std::vector<ScoredHit> hits;
  hits.reserve(take);
  for (std::size_t r = 0; r < take; ++r) hits.push_back({index.chunks_[order[r]].chunk_id, scores[order[r]], r + 1});
  return hits;
}

void save_index(const VectorIndex& index, const std::filesystem::path& path) {
  json entries = json::array();
  for (std::size_t i = 0; i < index.size(); ++i) {
    const auto r = index.row(i);
    entries.push_back({{"chunk", index.chunk(i)}, {"vector", std::vector<double>(r.begin(), r.end())}});
  }
  const std::string checksum = text::hex64(text::fnv1a64(entries.dump()));
  json root = {{"format_version", kIndexFormatVersion},
               {"dimension", index.dimension()},
               {"provider_tag", index.provider_tag()},
               {"count", index.size()},
               {"checksum", checksum},
               {"entries", std::move(entries)}};
  jsonl::write_text(path, root.dump() + "\n");
}

VectorIndex load_index(const std::filesystem::path& path) {
  const std::string raw = jsonl::read_text(path);
  auto corrupt = [&](const std::string& why) { return Error(Errc::CorruptIndexFile, path.string() + ": " + why); };

  json root;
  try {
    root = json::parse(raw);
  } catch (const json::parse_error& e) {
    throw corrupt(std::string("unreadable container (") + e.what() + ")");
  }
  try {
    if (!root.is_object()) throw corrupt("top level is not an object");
    const int version = root.at("format_version").get<int>();
    if (version != kIndexFormatVersion)
      throw corrupt("format_version " + std::to_string(version) + " unsupported (expected " +
                    std::to_string(kIndexFormatVersion) + ")");
    const auto dimension = root.at("dimension").get<std::size_t>();
    const auto count = root.at("count").get<std::size_t>();
    const json& entries = root.at("entries");
    if (!entries.is_array()) throw corrupt("entries is not an array");
    if (entries.size() != count)
      throw corrupt("declared count " + std::to_string(count) + " but " + std::to_string(entries.size()) +
                    " entries present");
    if (count == 0) throw corrupt("index is empty");
    if (dimension < 2) throw corrupt("dimension must be >= 2");
    const std::string checksum = text::hex64(text::fnv1a64(entries.dump()));
    if (checksum != root.at("checksum").get<std::string>()) throw corrupt("checksum mismatch");

    VectorIndex index;
    index.dimension_ = dimension;
    index.provider_tag_ = root.at("provider_tag").get<std::string>();
    index.matrix_.reserve(dimension * count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto values = entries[i].at("vector").get<std::vector<double>>();
      if (values.size() != dimension)
        throw corrupt("entry " + std::to_string(i) + " has dimension " + std::to_string(values.size()) +
                      ", declared " + std::to_string(dimension));
      for (double v : values)
        if (!std::isfinite(v)) throw corrupt("entry " + std::to_string(i) + " has a non-finite component");
      index.add(entries[i].at("chunk").get<corpus::Chunk>(), values);
    }
    return index;
  } catch (const Error& e) {
    if (e.code() == Errc::CorruptIndexFile) throw;
    throw corrupt(e.what());
  } catch (const json::exception& e) {
    throw corrupt(e.what());
  }
}

}  // namespace qgen::vecstore
