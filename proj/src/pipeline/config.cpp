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

#include "qgen/pipeline/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "qgen/error.hpp"
#include "qgen/jsonl.hpp"
#include "qgen/providers/mock_chat.hpp"
#include "qgen/vecstore/mock_embedder.hpp"

namespace qgen::pipeline {

using nlohmann::json;

namespace {

// Reads typed fields from one object, rejecting keys nobody asked for.
class Section {
 public:
  Section(const json& doc, std::string name) : name_(std::move(name)) {
    if (doc.is_null()) return;
    if (!doc.is_object()) throw Error(Errc::InvalidConfig, name_ + ": expected an object");
    obj_ = &doc;
  }

  template <typename T>
  void get(const char* key, T& out) {
    seen_.insert(key);
    if (obj_ == nullptr || !obj_->contains(key)) return;
    try {
      out = obj_->at(key).get<T>();
    } catch (const json::exception& e) {
      throw Error(Errc::InvalidConfig, name_ + "." + key + ": " + e.what());
    }
  }

  const json& sub(const char* key) {
    static const json null_json;
    seen_.insert(key);
    if (obj_ == nullptr || !obj_->contains(key)) return null_json;
    return obj_->at(key);
  }

  bool has(const char* key) const { return obj_ != nullptr && obj_->contains(key); }

  void finish() const {
    if (obj_ == nullptr) return;
    for (const auto& [key, value] : obj_->items())
      if (!seen_.count(key)) throw Error(Errc::InvalidConfig, name_ + ": unknown key '" + key + "'");
  }

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  const json* obj_ = nullptr;
  std::set<std::string, std::less<>> seen_;
};

fs::path resolve(const fs::path& base, const std::string& p) {
  if (p.empty()) return {};
  fs::path path(p);
  return path.is_absolute() ? path : (base / path).lexically_normal();
}

}  // namespace

RunConfig parse_config(const json& doc, const fs::path& base_dir) {
  if (!doc.is_object()) throw Error(Errc::InvalidConfig, "config root must be an object");
  RunConfig c;
  Section root(doc, "config");

  {
    Section s(root.sub("paths"), "paths");
    std::string knowledge, standards, workdir = c.paths.workdir.string();
    s.get("knowledge_blocks", knowledge);
    s.get("standards_blocks", standards);
    s.get("workdir", workdir);
    s.finish();
    c.paths.knowledge_blocks = resolve(base_dir, knowledge);
    c.paths.standards_blocks = resolve(base_dir, standards);
    c.paths.workdir = resolve(base_dir, workdir);
  }
  {
    Section s(root.sub("chunking"), "chunking");
    {
      Section r(s.sub("recursive"), "chunking.recursive");
      r.get("max_chars", c.chunking.recursive.max_chars);
      r.get("overlap", c.chunking.recursive.overlap);
      r.get("hard_split", c.chunking.recursive.hard_split);
      r.finish();
    }
    {
      Section r(s.sub("structure_aware"), "chunking.structure_aware");
      r.get("heading_font_delta", c.chunking.structure.heading_font_delta);
      r.get("max_chars", c.chunking.structure.max_chars);
      r.get("keywords", c.chunking.structure.keywords);
      r.finish();
    }
    s.finish();
  }
  {
    Section s(root.sub("providers"), "providers");
    auto& p = c.providers;
    s.get("mock", p.mock);
    s.get("chat_endpoint", p.chat_endpoint);
    s.get("embedding_endpoint", p.embedding_endpoint);
    s.get("chat_model", p.chat_model);
    s.get("embedding_model", p.embedding_model);
    s.get("api_key_env", p.api_key_env);
    s.get("timeout_seconds", p.timeout_seconds);
    s.get("max_in_flight", p.max_in_flight);
    s.get("embed_batch_size", p.embed_batch_size);
    {
      Section r(s.sub("retry"), "providers.retry");
      long long base_ms = p.retry.base_delay.count();
      r.get("max_retries", p.retry.max_retries);
      r.get("base_delay_ms", base_ms);
      r.finish();
      p.retry.base_delay = std::chrono::milliseconds(base_ms);
    }
    {
      Section m(s.sub("mock_settings"), "providers.mock_settings");
      m.get("dimension", p.mock_dimension);
      m.get("malformed_rate", p.mock_malformed_rate);
      m.get("seed", p.mock_seed);
      m.get("refusal_mode", p.mock_refusal);
      m.finish();
    }
    s.finish();
  }
  {
    Section s(root.sub("generation"), "generation");
    auto& g = c.generation;
    std::vector<std::string> names;
    s.get("methods", names);
    if (s.has("methods")) {
      g.methods.clear();
      for (const auto& n : names) {
        try {
          g.methods.push_back(generation::method_from_string(n));
        } catch (const Error& e) {
          throw Error(Errc::InvalidConfig, std::string("generation.methods: ") + e.what());
        }
      }
    }
    s.get("n", g.n);
    s.get("temperature", g.temperature);
    s.get("topic", g.topic);
    s.get("retrieval_k", g.retrieval_k);
    std::string prompts;
    s.get("prompts_dir", prompts);
    if (!prompts.empty()) g.prompts_dir = resolve(base_dir, prompts);
    s.finish();
  }
  {
    Section s(root.sub("evaluation"), "evaluation");
    auto& e = c.evaluation;
    std::string unit(eval::to_string(e.sts_unit));
    s.get("tau", e.tau);
    s.get("k", e.k);
    s.get("sts_unit", unit);
    s.get("refusal_markers", e.refusal_markers);
    s.finish();
    e.sts_unit = eval::sts_unit_from_string(unit);
  }
  {
    Section s(root.sub("report"), "report");
    std::string format = "markdown";
    s.get("format", format);
    s.finish();
    c.report.format = eval::report_format_from_string(format);
  }
  root.finish();
  validate_config(c);
  return c;
}

RunConfig load_config(const fs::path& path) {
  const std::string body = jsonl::read_text(path);
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidConfig, path.string() + ": " + e.what());
  }
  auto base = path.parent_path();
  if (base.empty()) base = ".";
  return parse_config(doc, fs::absolute(base).lexically_normal());
}

void validate_config(const RunConfig& c) {
  auto fail = [](const std::string& msg) { throw Error(Errc::InvalidConfig, msg); };
  if (c.chunking.recursive.max_chars == 0) fail("chunking.recursive.max_chars must be positive");
  if (c.chunking.recursive.overlap >= c.chunking.recursive.max_chars)
    fail("chunking.recursive.overlap must be below max_chars");
  if (c.chunking.structure.max_chars == 0) fail("chunking.structure_aware.max_chars must be positive");
  if (c.providers.max_in_flight == 0) fail("providers.max_in_flight must be positive");
  if (c.providers.embed_batch_size == 0) fail("providers.embed_batch_size must be positive");
  if (c.providers.retry.max_retries < 0) fail("providers.retry.max_retries must be non-negative");
  if (c.providers.mock_dimension < 2) fail("providers.mock_settings.dimension must be at least 2");
  if (!(c.providers.mock_malformed_rate >= 0.0 && c.providers.mock_malformed_rate <= 1.0))
    fail("providers.mock_settings.malformed_rate must lie in [0, 1]");
  if (c.generation.methods.empty()) fail("generation.methods must name at least one method");
  if (c.generation.n == 0) fail("generation.n must be positive");
  if (c.generation.retrieval_k == 0) fail("generation.retrieval_k must be positive");
  if (c.generation.topic.find_first_not_of(" \t\n") == std::string::npos) fail("generation.topic must not be empty");
  if (!(c.evaluation.tau >= 0.0 && c.evaluation.tau <= 1.0)) fail("evaluation.tau must lie in [0, 1]");
  if (c.evaluation.k == 0) fail("evaluation.k must be positive");
}

json config_to_json(const RunConfig& c) {
  json methods = json::array();
  for (auto m : c.generation.methods) methods.push_back(generation::to_string(m));
  return json{
      {"paths",
       {{"knowledge_blocks", c.paths.knowledge_blocks.generic_string()},
        {"standards_blocks", c.paths.standards_blocks.generic_string()},
        {"workdir", c.paths.workdir.generic_string()}}},
      {"chunking",
       {{"recursive",
         {{"max_chars", c.chunking.recursive.max_chars},
          {"overlap", c.chunking.recursive.overlap},
          {"hard_split", c.chunking.recursive.hard_split}}},
        {"structure_aware",
         {{"heading_font_delta", c.chunking.structure.heading_font_delta},
          {"max_chars", c.chunking.structure.max_chars},
          {"keywords", c.chunking.structure.keywords}}}}},
      {"providers",
       {{"mock", c.providers.mock},
        {"chat_endpoint", c.providers.chat_endpoint},
        {"embedding_endpoint", c.providers.embedding_endpoint},
        {"chat_model", c.providers.chat_model},
        {"embedding_model", c.providers.embedding_model},
        {"api_key_env", c.providers.api_key_env},
        {"timeout_seconds", c.providers.timeout_seconds},
        {"max_in_flight", c.providers.max_in_flight},
        {"embed_batch_size", c.providers.embed_batch_size},
        {"retry",
         {{"max_retries", c.providers.retry.max_retries},
          {"base_delay_ms", c.providers.retry.base_delay.count()}}},
        {"mock_settings",
         {{"dimension", c.providers.mock_dimension},
          {"malformed_rate", c.providers.mock_malformed_rate},
          {"seed", c.providers.mock_seed},
          {"refusal_mode", c.providers.mock_refusal}}}}},
      {"generation",
       {{"methods", methods},
        {"n", c.generation.n},
        {"temperature", c.generation.temperature},
        {"topic", c.generation.topic},
        {"retrieval_k", c.generation.retrieval_k},
        {"prompts_dir", c.generation.prompts_dir ? c.generation.prompts_dir->generic_string() : std::string()}}},
      {"evaluation",
       {{"tau", c.evaluation.tau},
        {"k", c.evaluation.k},
        {"sts_unit", eval::to_string(c.evaluation.sts_unit)},
        {"refusal_markers", c.evaluation.refusal_markers}}},
      {"report", {{"format", c.report.format == eval::ReportFormat::Json ? "json" : "markdown"}}},
  };
}

void apply_overrides(RunConfig& c, const Overrides& o) {
  if (o.mock) c.providers.mock = *o.mock;
  if (o.n) c.generation.n = *o.n;
  if (o.methods) c.generation.methods = *o.methods;
  if (o.tau) c.evaluation.tau = *o.tau;
  if (o.k) c.evaluation.k = *o.k;
  if (o.workdir) c.paths.workdir = fs::absolute(*o.workdir).lexically_normal();
  validate_config(c);
}

std::vector<generation::Method> parse_method_list(std::string_view list) {
  std::vector<generation::Method> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    auto comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    auto name = list.substr(pos, comma - pos);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) {
      try {
        const auto m = generation::method_from_string(name);
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
      } catch (const Error& e) {
        throw Error(Errc::InvalidConfig, e.what());
      }
    }
    pos = comma + 1;
  }
  if (out.empty()) throw Error(Errc::InvalidConfig, "method list is empty");
  return out;
}

ProviderSet make_providers(const RunConfig& config, std::shared_ptr<providers::HttpTransport> transport) {
  const auto& p = config.providers;
  ProviderSet set;
  if (p.mock) {
    set.embedder = std::make_unique<vecstore::MockEmbeddingProvider>(p.mock_dimension);
    providers::MockChatConfig mc;
    mc.malformed_rate = p.mock_malformed_rate;
    mc.seed = p.mock_seed;
    mc.refusal_mode = p.mock_refusal;
    set.chat = std::make_unique<providers::MockChatProvider>(mc);
    return set;
  }
  const char* key = std::getenv(p.api_key_env.c_str());
  if (key == nullptr || *key == '\0')
    throw Error(Errc::InvalidConfig, "real providers need an API key in $" + p.api_key_env + " (or run with --mock)");
  if (!transport) transport = providers::make_http_transport(std::chrono::seconds(p.timeout_seconds));
  set.embedder = std::make_unique<providers::HttpEmbeddingProvider>(transport, p.embedding_endpoint,
                                                                     p.embedding_model, key);
  set.chat = std::make_unique<providers::HttpChatProvider>(transport, p.chat_endpoint, p.chat_model, key);
  return set;
}

}  // namespace qgen::pipeline
