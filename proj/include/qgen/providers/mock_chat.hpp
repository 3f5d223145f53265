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

#include "qgen/providers/chat.hpp"

namespace qgen::providers {

struct MockChatConfig {
  /// Share of plain-mode generations answered with a malformed reply.
  double malformed_rate = 0.0;
  std::uint64_t seed = 42;
  /// Answer every QA request with a refusal.
  bool refusal_mode = false;
  bool supports_schema = true;
};

/// Deterministic offline chat model.
///
/// Generation: when the prompt carries context blocks the question is built
/// from the first (highest-ranked) block; otherwise it comes from a fixed bank
/// of generic, off-corpus questions. The request seed (or an internal call
/// counter when absent) is the ordinal that selects bank entries, answer keys
/// and the malformed schedule. Schema-constrained requests always conform.
///
/// Malformed schedule: ordinals are grouped in blocks of 100; in every block
/// exactly round(100 * malformed_rate) positions, drawn by a seeded
/// Fisher-Yates shuffle, produce a reply that fails parsing.
///
/// Answering: a refusal in refusal mode or when the prompt has no context,
/// otherwise an answer quoting the first context block.
class MockChatProvider final : public ChatProvider {
 public:
  explicit MockChatProvider(MockChatConfig config = {});

  std::string tag() const override;
  bool supports_schema() const override { return config_.supports_schema; }
  ChatResponse complete(const ChatRequest& request) override;

  std::size_t calls() const { return calls_.load(); }
  std::size_t answer_calls() const { return answer_calls_.load(); }

  static bool malformed_at(std::uint64_t seed, double rate, std::uint64_t ordinal);
  static std::size_t scheduled_failures(std::uint64_t seed, double rate, std::uint64_t count);

  static constexpr std::string_view kRefusal =
      "Maaf, soalan ini tidak dapat dijawab berdasarkan konteks yang diberikan.";

 private:
  ChatResponse generate(const ChatRequest& request, std::uint64_t ordinal) const;
  ChatResponse answer(const ChatRequest& request) const;

  MockChatConfig config_;
  std::atomic<std::size_t> calls_{0};
  std::atomic<std::size_t> answer_calls_{0};
  std::atomic<std::uint64_t> counter_{0};
};

}  // namespace qgen::providers
