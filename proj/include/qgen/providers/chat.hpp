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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qgen::providers {

/// What the caller wants from a completion. Remote adapters ignore it; the
/// mock uses it to pick between question writing and question answering.
enum class ChatTask { Generate, Answer };

struct ChatMessage {
  std::string role;  ///< "system" | "user"
  std::string content;
};

struct ChatRequest {
  std::vector<ChatMessage> messages;
  /// When set the provider must answer in schema-constrained mode and the
  /// reply is guaranteed to conform to this JSON schema.
  std::optional<nlohmann::json> response_schema;
  double temperature = 0.7;
  std::optional<std::int64_t> seed;
  ChatTask task = ChatTask::Generate;
};

struct ChatResponse {
  std::string text;
};

/// Chat-completion backend. complete() may be called from several threads.
class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual std::string tag() const = 0;
  /// Whether schema-constrained completion is available.
  virtual bool supports_schema() const = 0;
  /// Throws ProviderError on transport or HTTP failure.
  virtual ChatResponse complete(const ChatRequest& request) = 0;
};

}  // namespace qgen::providers
