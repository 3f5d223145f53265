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

#include "qgen/vecstore/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "qgen/error.hpp"
#include "qgen/parallel.hpp"
#include "qgen/simd/dot.hpp"
#include "qgen/text_util.hpp"

namespace qgen::vecstore {

EmbeddingVector::EmbeddingVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2)
    throw Error(Errc::DimensionMismatch, "embedding dimension must be >= 2, got " + std::to_string(values_.size()));
  for (double v : values_)
    if (!std::isfinite(v)) throw Error(Errc::ZeroVector, "embedding has a non-finite component");
}

double EmbeddingVector::norm() const { return std::sqrt(simd::dot(values_, values_)); }

EmbeddingVector EmbeddingVector::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw Error(Errc::ZeroVector, "cannot normalize a zero vector");
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] / n;
  return EmbeddingVector(std::move(out));
}

EmbeddingVector EmbeddingVector::scaled(double factor) const {
  std::vector<double> out(values_);
  for (double& v : out) v *= factor;
  return EmbeddingVector(std::move(out));
}

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dimension() != b.dimension())
    throw Error(Errc::DimensionMismatch,
                std::to_string(a.dimension()) + " vs " + std::to_string(b.dimension()));
  const double na = a.norm();
  const double nb = b.norm();
  if (!(na > 0.0) || !(nb > 0.0)) throw Error(Errc::ZeroVector, "cosine similarity of a zero vector");
  const double c = simd::dot(a.values(), b.values()) / (na * nb);
  return std::clamp(c, -1.0, 1.0);
}

std::vector<EmbeddingVector> embed_texts(EmbeddingProvider& provider, const std::vector<std::string>& texts,
                                         const EmbedOptions& options) {
  for (std::size_t i = 0; i < texts.size(); ++i)
    if (!text::has_non_space(texts[i])) throw Error(Errc::EmptyText, "text #" + std::to_string(i) + " is empty");
  if (texts.empty()) return {};

  const std::size_t batch = std::max<std::size_t>(options.batch_size, 1);
  const std::size_t batches = (texts.size() + batch - 1) / batch;

  auto raw = bounded_map(batches, options.max_in_flight, [&](std::size_t b) {
    const auto first = texts.begin() + static_cast<std::ptrdiff_t>(b * batch);
    const auto last = texts.begin() + static_cast<std::ptrdiff_t>(std::min(texts.size(), (b + 1) * batch));
    const std::vector<std::string> slice(first, last);
    auto vecs = providers::with_retry(options.retry, options.sleeper, [&] { return provider.embed(slice); });
    if (vecs.size() != slice.size())
      throw Error(Errc::LengthMismatch, provider.tag() + " returned " + std::to_string(vecs.size()) +
                                            " vectors for " + std::to_string(slice.size()) + " texts");
    return vecs;
  });

  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  std::size_t dim = 0;
  for (auto& vecs : raw) {
    for (auto& v : vecs) {
      if (dim == 0) dim = v.size();
      if (v.size() != dim)
        throw Error(Errc::DimensionMismatch, provider.tag() + " returned dimensions " + std::to_string(dim) +
                                                 " and " + std::to_string(v.size()));
      out.push_back(EmbeddingVector(std::move(v)).normalized());
    }
  }
  return out;
}

EmbeddingVector embed_one(EmbeddingProvider& provider, const std::string& text, const EmbedOptions& options) {
  return embed_texts(provider, {text}, options).front();
}

}  // namespace qgen::vecstore
