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

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qgen/error.hpp"
#include "qgen/providers/http.hpp"
#include "qgen/vecstore/embedding.hpp"
#include "test_support.hpp"

namespace qgen::providers {
namespace {

using nlohmann::json;

TEST(Http, RetryableStatuses) {
  EXPECT_TRUE(is_retryable_status(0));
  EXPECT_TRUE(is_retryable_status(429));
  EXPECT_TRUE(is_retryable_status(500));
  EXPECT_TRUE(is_retryable_status(503));
  EXPECT_FALSE(is_retryable_status(400));
  EXPECT_FALSE(is_retryable_status(401));
  EXPECT_FALSE(is_retryable_status(404));
}

TEST(HttpEmbedding, WireFormatAndOrdering) {
  const json reply = {{"data",
                       {{{"index", 1}, {"embedding", {0.0, 1.0}}}, {{"index", 0}, {"embedding", {1.0, 0.0}}}}}};
  auto transport = std::make_shared<testing::ScriptedTransport>(std::vector<HttpResponse>{{200, reply.dump()}});
  HttpEmbeddingProvider emb(transport, "http://e/v1/embeddings", "m-embed", "secret");
  const auto out = emb.embed({"a", "b"});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], (std::vector<double>{1.0, 0.0}));
  EXPECT_EQ(out[1], (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(transport->urls.at(0), "http://e/v1/embeddings");
  const auto body = json::parse(transport->bodies.at(0));
  EXPECT_EQ(body["model"], "m-embed");
  EXPECT_EQ(body["input"], json({"a", "b"}));
  bool auth = false;
  for (const auto& [k, v] : transport->last_headers) auth = auth || (k == "Authorization" && v == "Bearer secret");
  EXPECT_TRUE(auth);
  EXPECT_EQ(emb.tag(), "http-embedding:m-embed");
}

TEST(HttpEmbedding, RateLimitRetriedThroughEmbedTexts) {
  const json ok = {{"data", {{{"index", 0}, {"embedding", {3.0, 4.0}}}}}};
  auto transport = std::make_shared<testing::ScriptedTransport>(
      std::vector<HttpResponse>{{429, "rate"}, {429, "rate"}, {200, ok.dump()}});
  HttpEmbeddingProvider emb(transport, "http://e", "m", "");
  testing::RecordingSleeper rec;
  vecstore::EmbedOptions opts;
  opts.sleeper = rec.sleeper();
  const auto v = vecstore::embed_texts(emb, {"x"}, opts);
  EXPECT_NEAR(v[0].values()[0], 0.6, 1e-12);
  EXPECT_EQ(transport->calls(), 3u);
  EXPECT_EQ(rec.delays->size(), 2u);
}

TEST(HttpChat, RequestBodyAndReply) {
  const json reply = {{"choices", {{{"message", {{"role", "assistant"}, {"content", "hello"}}}}}}};
  auto transport = std::make_shared<testing::ScriptedTransport>(std::vector<HttpResponse>{{200, reply.dump()}});
  HttpChatProvider chat(transport, "http://c", "m-chat", "k");
  ChatRequest req;
  req.messages = {{"system", "sys"}, {"user", "usr"}};
  req.temperature = 0.2;
  req.seed = 9;
  req.response_schema = json{{"type", "object"}};
  EXPECT_EQ(chat.complete(req).text, "hello");
  const auto body = json::parse(transport->bodies.at(0));
  EXPECT_EQ(body["model"], "m-chat");
  EXPECT_EQ(body["messages"][1]["content"], "usr");
  EXPECT_EQ(body["temperature"], 0.2);
  EXPECT_EQ(body["seed"], 9);
  EXPECT_EQ(body["response_format"]["type"], "json_schema");
  EXPECT_EQ(body["response_format"]["json_schema"]["schema"], json({{"type", "object"}}));

  ChatRequest plain;
  plain.messages = {{"user", "u"}};
  const auto pb = chat.request_body(plain);
  EXPECT_FALSE(pb.contains("seed"));
  EXPECT_FALSE(pb.contains("response_format"));
}

TEST(HttpChat, ErrorClassification) {
  auto check = [](HttpResponse resp, int status, bool retryable) {
    auto transport = std::make_shared<testing::ScriptedTransport>(std::vector<HttpResponse>{resp});
    HttpChatProvider chat(transport, "http://c", "m", "");
    try {
      chat.complete({});
      ADD_FAILURE() << "expected ProviderError";
    } catch (const ProviderError& e) {
      EXPECT_EQ(e.status(), status);
      EXPECT_EQ(e.retryable(), retryable);
      EXPECT_EQ(e.code(), Errc::Provider);
    }
  };
  check({401, "unauthorized"}, 401, false);
  check({500, "oops"}, 500, true);
  check({0, ""}, 0, true);
  check({200, "not json"}, 200, false);
  check({200, R"({"choices": []})"}, 200, false);
}

}  // namespace
}  // namespace qgen::providers
