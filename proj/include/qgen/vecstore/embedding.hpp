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
#include <span>
#include <string>
#include <vector>

#include "qgen/providers/retry.hpp"

namespace qgen::vecstore {

/// Dense embedding with finite components and dimension >= 2.
class EmbeddingVector {
 public:
  EmbeddingVector() = default;
  /// Throws Error(DimensionMismatch) for d < 2 and Error(ZeroVector) on
  /// non-finite components.
  explicit EmbeddingVector(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t dimension() const { return values_.size(); }
  double norm() const;
  /// Unit-length copy. Throws Error(ZeroVector) when the norm is zero.
  EmbeddingVector normalized() const;
  EmbeddingVector scaled(double factor) const;

  friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;

 private:
  std::vector<double> values_;
};

/// dot(a, b) / (|a| |b|) clamped to [-1, 1]. Throws DimensionMismatch or
/// ZeroVector.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

/// A text embedding backend. embed() handles one request and may be called
/// from several threads at once.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  /// Identifies model and version; recorded in indexes and reports.
  virtual std::string tag() const = 0;
  /// One raw (unnormalized) vector per input, same order. Throws
  /// ProviderError on failure.
  virtual std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) = 0;
};

struct EmbedOptions {
  providers::RetryPolicy retry{};
  providers::Sleeper sleeper = providers::real_sleeper();
  std::size_t batch_size = 64;
  std::size_t max_in_flight = 4;
};

/// Embeds `texts` in batches (concurrently, bounded by max_in_flight),
/// retrying retryable provider errors with exponential backoff, and returns
/// L2-normalized vectors in input order.
std::vector<EmbeddingVector> embed_texts(EmbeddingProvider& provider, const std::vector<std::string>& texts,
                                         const EmbedOptions& options = {});

EmbeddingVector embed_one(EmbeddingProvider& provider, const std::string& text, const EmbedOptions& options = {});

}  // namespace qgen::vecstore
