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

#include "qgen/vecstore/mock_embedder.hpp"

#include <algorithm>

#include "qgen/error.hpp"
#include "qgen/text_util.hpp"

namespace qgen::vecstore {

MockEmbeddingProvider::MockEmbeddingProvider(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ < 2) throw Error(Errc::DimensionMismatch, "mock embedder dimension must be >= 2");
}

std::string MockEmbeddingProvider::tag() const { return "mock-bow-fnv1a-v2-d" + std::to_string(dimension_); }

std::size_t MockEmbeddingProvider::bucket_of(std::string_view token) const {
  return static_cast<std::size_t>(text::fnv1a64(token) % dimension_);
}

namespace {

bool has_letter(std::string_view token) {
  return std::any_of(token.begin(), token.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return (u >= 'a' && u <= 'z') || u >= 0x80;
  });
}

}  // namespace

std::vector<std::string> MockEmbeddingProvider::tokens(std::string_view input) {
  auto all = text::word_tokens(input);
  std::vector<std::string> words;
  for (auto& t : all)
    if (has_letter(t)) words.push_back(std::move(t));
  if (!words.empty()) return words;
  // Numerals only: fall back to them, then to the whole text.
  all = text::word_tokens(input);
  if (all.empty() && text::has_non_space(input)) all.emplace_back(text::trim(input));
  return all;
}

std::vector<double> MockEmbeddingProvider::counts(std::string_view input) const {
  std::vector<double> v(dimension_, 0.0);
  const auto toks = tokens(input);
  if (toks.empty()) {
    v[bucket_of(input)] += 1.0;
    return v;
  }
  for (const auto& t : toks) v[bucket_of(t)] += 1.0;
  return v;
}

std::vector<std::vector<double>> MockEmbeddingProvider::embed(const std::vector<std::string>& texts) {
  calls_.fetch_add(1);
  std::vector<std::vector<double>> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(counts(t));
  return out;
}

}  // namespace qgen::vecstore
