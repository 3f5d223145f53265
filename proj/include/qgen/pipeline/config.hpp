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
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgen/corpus/chunkers.hpp"
#include "qgen/eval/evaluate.hpp"
#include "qgen/eval/report.hpp"
#include "qgen/generation/generator.hpp"
#include "qgen/providers/chat.hpp"
#include "qgen/providers/http.hpp"
#include "qgen/providers/retry.hpp"
#include "qgen/vecstore/embedding.hpp"

namespace qgen::pipeline {

namespace fs = std::filesystem;

struct PathsConfig {
  fs::path knowledge_blocks;
  fs::path standards_blocks;
  fs::path workdir = "work";
};

struct ChunkingConfig {
  corpus::RecursiveParams recursive{};
  corpus::StructureParams structure{};
};

struct ProvidersConfig {
  bool mock = true;
  std::string chat_endpoint = "https://api.openai.com/v1/chat/completions";
  std::string embedding_endpoint = "https://api.openai.com/v1/embeddings";
  std::string chat_model = "gpt-4o";
  std::string embedding_model = "text-embedding-3-small";
  std::string api_key_env = "QGEN_API_KEY";
  int timeout_seconds = 60;
  providers::RetryPolicy retry{};
  std::size_t max_in_flight = 4;
  std::size_t embed_batch_size = 64;
  // Offline providers.
  std::size_t mock_dimension = 64;
  double mock_malformed_rate = 0.04;
  std::uint64_t mock_seed = 42;
  bool mock_refusal = false;
};

struct GenerationConfig {
  std::vector<generation::Method> methods{generation::kAllMethods.begin(), generation::kAllMethods.end()};
  std::size_t n = 100;
  double temperature = 0.7;
  std::string topic = "Integer";
  std::size_t retrieval_k = 3;
  /// Template directory; built-in templates when unset.
  std::optional<fs::path> prompts_dir;
};

struct EvaluationConfig {
  double tau = 0.5;
  std::size_t k = 3;
  eval::StsUnit sts_unit = eval::StsUnit::Stem;
  std::vector<std::string> refusal_markers = eval::default_refusal_markers();
};

struct ReportConfig {
  /// Format printed by the report subcommand; both files are always written.
  eval::ReportFormat format = eval::ReportFormat::Markdown;
};

struct RunConfig {
  PathsConfig paths;
  ChunkingConfig chunking;
  ProvidersConfig providers;
  GenerationConfig generation;
  EvaluationConfig evaluation;
  ReportConfig report;
};

/// Parses a config document. Missing keys keep their defaults; unknown keys
/// and ill-typed values throw InvalidConfig. Relative paths resolve against
/// `base_dir`.
RunConfig parse_config(const nlohmann::json& doc, const fs::path& base_dir);

/// Reads and parses a config file (paths relative to its directory). Throws
/// FileNotFound or InvalidConfig.
RunConfig load_config(const fs::path& path);

/// Full resolved config, every field present.
nlohmann::json config_to_json(const RunConfig& config);

/// Throws InvalidConfig when values are out of range.
void validate_config(const RunConfig& config);

/// Command-line values; each set field replaces the config value.
struct Overrides {
  std::optional<bool> mock;
  std::optional<std::size_t> n;
  std::optional<std::vector<generation::Method>> methods;
  std::optional<double> tau;
  std::optional<std::size_t> k;
  std::optional<fs::path> workdir;
};

void apply_overrides(RunConfig& config, const Overrides& overrides);

/// Comma-separated method names.
std::vector<generation::Method> parse_method_list(std::string_view list);

struct ProviderSet {
  std::unique_ptr<vecstore::EmbeddingProvider> embedder;
  std::unique_ptr<providers::ChatProvider> chat;
};

/// Mock providers when config.providers.mock is set; these never touch
/// `transport`. Otherwise HTTP providers over `transport` (a real client
/// when null), keyed by the environment variable named in the config;
/// a missing key throws InvalidConfig.
ProviderSet make_providers(const RunConfig& config, std::shared_ptr<providers::HttpTransport> transport = nullptr);

}  // namespace qgen::pipeline
