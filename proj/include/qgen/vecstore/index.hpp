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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qgen/corpus/types.hpp"
#include "qgen/vecstore/embedding.hpp"

namespace qgen::vecstore {

struct ScoredHit {
  std::string chunk_id;
  double score = 0.0;  ///< cosine similarity in [-1, 1]
  std::size_t rank = 0;  ///< 1-based

  friend bool operator==(const ScoredHit&, const ScoredHit&) = default;
};

/// Flat exact-search index. Vectors are stored unit-norm in one row-major
/// matrix so a query is a single pass of dot products. Immutable once built.
class VectorIndex {
 public:
  VectorIndex() = default;

  std::size_t size() const { return chunks_.size(); }
  std::size_t dimension() const { return dimension_; }
  const std::string& provider_tag() const { return provider_tag_; }

  const corpus::Chunk& chunk(std::size_t i) const { return chunks_[i]; }
  const std::vector<corpus::Chunk>& chunks() const { return chunks_; }
  std::span<const double> row(std::size_t i) const;
  EmbeddingVector vector(std::size_t i) const;
  /// nullptr when absent.
  const corpus::Chunk* find(std::string_view chunk_id) const;

  friend bool operator==(const VectorIndex& a, const VectorIndex& b);

 private:
  friend VectorIndex build_index(std::vector<corpus::Chunk>, const std::vector<EmbeddingVector>&, std::string);
  friend VectorIndex load_index(const std::filesystem::path&);
  friend std::vector<ScoredHit> top_k(const VectorIndex&, const EmbeddingVector&, std::size_t);

  void add(corpus::Chunk chunk, std::span<const double> unit_row);

  std::vector<corpus::Chunk> chunks_;
  std::vector<double> matrix_;
  std::size_t dimension_ = 0;
  std::string provider_tag_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

/// Pairs chunks with their vectors (normalized on insertion). Throws
/// EmptyIndex, LengthMismatch, DuplicateChunkId, DimensionMismatch or
/// ZeroVector.
VectorIndex build_index(std::vector<corpus::Chunk> chunks, const std::vector<EmbeddingVector>& vectors,
                        std::string provider_tag);

/// Exhaustive cosine search. Returns min(k, size) hits ordered by score
/// descending, ties by chunk_id ascending. Throws DimensionMismatch,
/// ZeroVector, or InvalidRequest for k == 0.
std::vector<ScoredHit> top_k(const VectorIndex& index, const EmbeddingVector& query, std::size_t k);

inline constexpr int kIndexFormatVersion = 1;

/// JSON container: {format_version, dimension, provider_tag, count, checksum,
/// entries: [{chunk, vector}]}. checksum is FNV-1a 64 (hex) over the compact
/// dump of `entries`. Throws IoError.
void save_index(const VectorIndex& index, const std::filesystem::path& path);

/// Inverse of save_index. Throws FileNotFound or CorruptIndexFile (bad JSON,
/// wrong version, count/dimension mismatch, checksum mismatch, duplicate ids).
VectorIndex load_index(const std::filesystem::path& path);

}  // namespace qgen::vecstore
