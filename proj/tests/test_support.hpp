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
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qgen/corpus/types.hpp"
#include "qgen/providers/chat.hpp"
#include "qgen/providers/http.hpp"
#include "qgen/providers/retry.hpp"
#include "qgen/vecstore/embedding.hpp"

namespace qgen::testing {

namespace fs = std::filesystem;

inline fs::path fixture_dir() { return QGEN_FIXTURE_DIR; }
inline fs::path data_dir() { return QGEN_TEST_DATA_DIR; }

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag = "qgen") {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            (tag + "-" + std::to_string(rd()) + "-" + std::to_string(counter.fetch_add(1)));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

struct BlockSpec {
  std::string text;
  double font_size = 11.0;
  int page = 1;
};

/// In-memory document; blocks get stacked bboxes.
inline corpus::SourceDocument make_doc(const std::vector<BlockSpec>& blocks,
                                       corpus::DocumentRole role = corpus::DocumentRole::KnowledgeSource,
                                       std::string doc_id = "doc") {
  corpus::SourceDocument doc;
  doc.doc_id = std::move(doc_id);
  doc.role = role;
  double y = 40.0;
  for (const auto& b : blocks) {
    if (doc.pages.empty() || doc.pages.back().number != b.page) {
      doc.pages.push_back({b.page, {}});
      y = 40.0;
    }
    corpus::Block block;
    block.text = b.text;
    block.page = b.page;
    block.bbox = {50.0, y, 550.0, y + 20.0};
    block.font_size = b.font_size;
    doc.pages.back().blocks.push_back(std::move(block));
    y += 30.0;
  }
  return doc;
}

/// Records requested delays instead of sleeping.
struct RecordingSleeper {
  std::shared_ptr<std::vector<std::chrono::milliseconds>> delays =
      std::make_shared<std::vector<std::chrono::milliseconds>>();
  providers::Sleeper sleeper() const {
    auto d = delays;
    return [d](std::chrono::milliseconds ms) { d->push_back(ms); };
  }
};

inline providers::Sleeper no_sleep() {
  return [](std::chrono::milliseconds) {};
}

/// Transport that counts calls and replays scripted responses (the last one
/// repeats).
class ScriptedTransport final : public providers::HttpTransport {
 public:
  explicit ScriptedTransport(std::vector<providers::HttpResponse> script = {}) : script_(std::move(script)) {}

  providers::HttpResponse post(const std::string& url, const providers::Headers& headers,
                               const std::string& body) override {
    std::lock_guard lock(mu_);
    urls.push_back(url);
    last_headers = headers;
    bodies.push_back(body);
    const std::size_t i = calls_++;
    if (script_.empty()) return {599, "no script"};
    return script_[std::min(i, script_.size() - 1)];
  }

  std::size_t calls() const {
    std::lock_guard lock(mu_);
    return calls_;
  }

  std::vector<std::string> urls;
  std::vector<std::string> bodies;
  providers::Headers last_headers;

 private:
  mutable std::mutex mu_;
  std::vector<providers::HttpResponse> script_;
  std::size_t calls_ = 0;
};

/// Embedder returning caller-chosen vectors per text.
class TableEmbedder final : public vecstore::EmbeddingProvider {
 public:
  std::function<std::vector<double>(const std::string&)> fn;
  std::string tag_value = "table-embedder";
  std::atomic<std::size_t> calls{0};

  std::string tag() const override { return tag_value; }
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override {
    calls.fetch_add(1);
    std::vector<std::vector<double>> out;
    for (const auto& t : texts) out.push_back(fn(t));
    return out;
  }
};

/// Chat provider returning a fixed reply and recording requests.
class FixedChat final : public providers::ChatProvider {
 public:
  explicit FixedChat(std::string reply, bool schema = true) : reply_(std::move(reply)), schema_(schema) {}
  std::string tag() const override { return "fixed-chat"; }
  bool supports_schema() const override { return schema_; }
  providers::ChatResponse complete(const providers::ChatRequest& request) override {
    std::lock_guard lock(mu_);
    requests.push_back(request);
    return {reply_};
  }
  std::size_t calls() const {
    std::lock_guard lock(mu_);
    return requests.size();
  }
  std::vector<providers::ChatRequest> requests;

 private:
  mutable std::mutex mu_;
  std::string reply_;
  bool schema_;
};

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> v(dim);
  for (auto& x : v) x = dist(rng);
  return v;
}

/// Random text of words, spaces, newlines, blank lines and sentence ends,
/// with occasional multi-byte characters.
inline std::string random_text(std::mt19937_64& rng, std::size_t approx_len) {
  static const std::vector<std::string> words{"nombor", "integer", "garis", "sifar", "positif", "negatif",
                                              "tambah", "tolak",   "darab", "bahagi", "contoh", "é",
                                              "ŋombor", "x",       "panjangsekalitanpapemisah"};
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> sep(0, 19);
  std::string out;
  while (out.size() < approx_len) {
    out += words[pick(rng)];
    const int s = sep(rng);
    if (s < 12)
      out += ' ';
    else if (s < 14)
      out += ". ";
    else if (s < 16)
      out += '\n';
    else if (s < 17)
      out += "\n\n";
    else if (s < 18)
      out += "? ";
    else
      out += ", ";
  }
  return out;
}

}  // namespace qgen::testing
