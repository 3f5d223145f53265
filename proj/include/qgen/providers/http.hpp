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

#include <chrono>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qgen/providers/chat.hpp"
#include "qgen/vecstore/embedding.hpp"

namespace qgen::providers {

struct HttpResponse {
  int status = 0;  ///< 0 when the request never completed
  std::string body;
};

using Headers = std::vector<std::pair<std::string, std::string>>;

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse post(const std::string& url, const Headers& headers, const std::string& body) = 0;
};

/// cpp-httplib backed transport. https URLs need the build to find OpenSSL.
std::shared_ptr<HttpTransport> make_http_transport(std::chrono::seconds timeout = std::chrono::seconds(60));

/// Status 0 (transport failure), 429 and 5xx are retryable.
bool is_retryable_status(int status);

/// POST {model, input: [texts]} -> {data: [{embedding: [...], index}]}.
class HttpEmbeddingProvider final : public vecstore::EmbeddingProvider {
 public:
  HttpEmbeddingProvider(std::shared_ptr<HttpTransport> transport, std::string endpoint, std::string model,
                        std::string api_key);

  std::string tag() const override;
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

 private:
  std::shared_ptr<HttpTransport> transport_;
  std::string endpoint_;
  std::string model_;
  std::string api_key_;
};

/// POST {model, messages, temperature, seed?, response_format?}; reads
/// choices[0].message.content. A response schema is sent as a strict
/// json_schema response format.
class HttpChatProvider final : public ChatProvider {
 public:
  HttpChatProvider(std::shared_ptr<HttpTransport> transport, std::string endpoint, std::string model,
                   std::string api_key);

  std::string tag() const override;
  bool supports_schema() const override { return true; }
  ChatResponse complete(const ChatRequest& request) override;

  /// Request body for `request`; exposed for wire-format tests.
  nlohmann::json request_body(const ChatRequest& request) const;

 private:
  std::shared_ptr<HttpTransport> transport_;
  std::string endpoint_;
  std::string model_;
  std::string api_key_;
};

}  // namespace qgen::providers
