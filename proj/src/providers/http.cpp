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

#include "qgen/providers/http.hpp"

#include <algorithm>

#include "qgen/error.hpp"

namespace qgen::providers {

using nlohmann::json;

bool is_retryable_status(int status) { return status == 0 || status == 429 || status >= 500; }

namespace {

Headers auth_headers(const std::string& api_key) {
  Headers h{{"Content-Type", "application/json"}};
  if (!api_key.empty()) h.emplace_back("Authorization", "Bearer " + api_key);
  return h;
}

json post_json(HttpTransport& transport, const std::string& url, const std::string& api_key, const json& body) {
  const HttpResponse resp = transport.post(url, auth_headers(api_key), body.dump());
  if (resp.status < 200 || resp.status >= 300) {
    std::string message = resp.body.substr(0, 512);
    if (resp.status == 0 && message.empty()) message = "no response from " + url;
    throw ProviderError(resp.status, message, is_retryable_status(resp.status));
  }
  try {
    return json::parse(resp.body);
  } catch (const json::parse_error&) {
    throw ProviderError(resp.status, "response is not JSON", false);
  }
}

}  // namespace

HttpEmbeddingProvider::HttpEmbeddingProvider(std::shared_ptr<HttpTransport> transport, std::string endpoint,
                                             std::string model, std::string api_key)
    : transport_(std::move(transport)),
      endpoint_(std::move(endpoint)),
      model_(std::move(model)),
      api_key_(std::move(api_key)) {}

std::string HttpEmbeddingProvider::tag() const { return "http-embedding:" + model_; }

std::vector<std::vector<double>> HttpEmbeddingProvider::embed(const std::vector<std::string>& texts) {
  const json reply = post_json(*transport_, endpoint_, api_key_, {{"model", model_}, {"input", texts}});
  try {
    const json& data = reply.at("data");
    std::vector<std::pair<std::size_t, std::vector<double>>> rows;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const std::size_t idx = data[i].contains("index") ? data[i].at("index").get<std::size_t>() : i;
      rows.emplace_back(idx, data[i].at("embedding").get<std::vector<double>>());
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::vector<double>> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(std::move(r.second));
    return out;
  } catch (const json::exception& e) {
    throw ProviderError(200, std::string("unexpected embedding response shape: ") + e.what(), false);
  }
}

HttpChatProvider::HttpChatProvider(std::shared_ptr<HttpTransport> transport, std::string endpoint, std::string model,
                                   std::string api_key)
    : transport_(std::move(transport)),
      endpoint_(std::move(endpoint)),
      model_(std::move(model)),
      api_key_(std::move(api_key)) {}

std::string HttpChatProvider::tag() const { return "http-chat:" + model_; }

json HttpChatProvider::request_body(const ChatRequest& request) const {
  json messages = json::array();
  for (const auto& m : request.messages) messages.push_back({{"role", m.role}, {"content", m.content}});
  json body = {{"model", model_}, {"messages", std::move(messages)}, {"temperature", request.temperature}};
  if (request.seed) body["seed"] = *request.seed;
  if (request.response_schema)
    body["response_format"] = {{"type", "json_schema"},
                               {"json_schema", {{"name", "mcq"}, {"strict", true}, {"schema", *request.response_schema}}}};
  return body;
}

ChatResponse HttpChatProvider::complete(const ChatRequest& request) {
  const json reply = post_json(*transport_, endpoint_, api_key_, request_body(request));
  try {
    const json& content = reply.at("choices").at(0).at("message").at("content");
    return {content.is_string() ? content.get<std::string>() : content.dump()};
  } catch (const json::exception& e) {
    throw ProviderError(200, std::string("unexpected chat response shape: ") + e.what(), false);
  }
}

}  // namespace qgen::providers
