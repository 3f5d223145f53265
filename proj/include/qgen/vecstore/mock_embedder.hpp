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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/vecstore/embedding.hpp"

namespace qgen::vecstore {

/// Offline bag-of-words embedder, hash scheme v2: lowercase word tokens
/// (text::word_tokens) that contain a letter are hashed with 64-bit FNV-1a
/// into one of `dimension` buckets and counted. Numerals such as standard
/// codes are skipped unless the text has nothing else; a text with no tokens
/// at all counts its trimmed bytes as a single token. Output is the raw count
/// vector; embed_texts normalizes.
class MockEmbeddingProvider final : public EmbeddingProvider {
 public:
  static constexpr std::size_t kDefaultDimension = 64;

  explicit MockEmbeddingProvider(std::size_t dimension = kDefaultDimension);

  std::string tag() const override;
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

  std::size_t dimension() const { return dimension_; }
  std::size_t bucket_of(std::string_view token) const;
  std::vector<double> counts(std::string_view text) const;
  /// The tokens counted for `text`.
  static std::vector<std::string> tokens(std::string_view text);
  std::size_t calls() const { return calls_.load(); }

 private:
  std::size_t dimension_;
  std::atomic<std::size_t> calls_{0};
};

}  // namespace qgen::vecstore
