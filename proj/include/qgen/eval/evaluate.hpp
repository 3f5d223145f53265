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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgen/corpus/types.hpp"
#include "qgen/generation/generator.hpp"
#include "qgen/generation/mcq.hpp"
#include "qgen/providers/chat.hpp"
#include "qgen/vecstore/embedding.hpp"
#include "qgen/vecstore/index.hpp"

namespace qgen::eval {

/// Which part of an MCQ is embedded for scoring.
enum class StsUnit { Stem, Full };

std::string_view to_string(StsUnit unit);
StsUnit sts_unit_from_string(std::string_view name);

struct StandardVector {
  corpus::LearningStandard standard;
  vecstore::EmbeddingVector vector;
};

/// Pairs each standard with the vector of its chunk in a standards index.
/// Throws WrongIndexRole for non-standard chunks and DanglingReference when
/// a standard's chunk is missing from the index.
std::vector<StandardVector> standard_vectors(const vecstore::VectorIndex& index,
                                             std::span<const corpus::StandardChunk> standards);

struct AlignmentScore {
  std::string question_ref;
  double score = 0.0;
  std::string best_standard;
  std::optional<std::map<std::string, double>> per_standard;
};

struct StsOptions {
  StsUnit unit = StsUnit::Stem;
  bool keep_per_standard = false;
  vecstore::EmbedOptions embed{};
};

/// Text embedded for an MCQ under `unit`.
std::string scoring_text(const generation::Mcq& mcq, StsUnit unit);

/// Max cosine of `question` against every standard vector. Near-equal maxima
/// (within 1e-12) resolve to the lowest standard code. Throws EmptyStandards.
AlignmentScore sts_alignment(const vecstore::EmbeddingVector& question, std::span<const StandardVector> standards,
                             bool keep_per_standard = false);

/// Embeds the MCQ (stem by default) and scores it against `standards`.
AlignmentScore sts_alignment(const generation::Mcq& mcq, std::span<const StandardVector> standards,
                             vecstore::EmbeddingProvider& embedder, const StsOptions& options = {});

enum class Verdict { Valid, Invalid };
enum class VerdictReason { AboveThresholdAnswered, BelowThreshold, Refusal, NoMcq };

std::string_view to_string(Verdict verdict);
std::string_view to_string(VerdictReason reason);
Verdict verdict_from_string(std::string_view name);
VerdictReason verdict_reason_from_string(std::string_view name);

struct ValidityVerdict {
  std::string question_ref;
  Verdict verdict = Verdict::Invalid;
  double top_score = 0.0;
  std::optional<std::string> answer_text;
  VerdictReason reason = VerdictReason::NoMcq;
};

/// Malay and English phrases that mark an answer as a refusal.
const std::vector<std::string>& default_refusal_markers();

/// Case-insensitive (ASCII) substring match against `markers`; an empty or
/// blank answer also counts as a refusal.
bool is_refusal(std::string_view answer, std::span<const std::string> markers);

struct ValidityParams {
  double tau = 0.5;
  std::size_t k = 3;
  std::vector<std::string> refusal_markers = default_refusal_markers();
  vecstore::EmbedOptions embed{};
  providers::RetryPolicy retry{};
  providers::Sleeper sleeper = providers::real_sleeper();
};

/// Retrieval-gated QA check over a standards-only index: the stem is embedded
/// and matched against the top-k standards; below tau the question is Invalid
/// without consulting the chat model, otherwise the model answers from the
/// retrieved standards and a refusal makes it Invalid. Throws WrongIndexRole,
/// InvalidRequest (tau outside [0,1], k == 0) or ProviderError.
ValidityVerdict ragqa_validity(const generation::Mcq& mcq, const vecstore::VectorIndex& rpt_index,
                               vecstore::EmbeddingProvider& embedder, providers::ChatProvider& chat,
                               const ValidityParams& params = {});

struct EvalRecord {
  std::string outcome_id;
  generation::Method method = generation::Method::BasicPrompt;
  double score = 0.0;
  std::string best_standard;
  Verdict verdict = Verdict::Invalid;
  VerdictReason reason = VerdictReason::NoMcq;
  double top_score = 0.0;
};

void to_json(nlohmann::json& j, const EvalRecord& record);
void from_json(const nlohmann::json& j, EvalRecord& record);

struct EvalBatch {
  std::vector<AlignmentScore> alignments;
  std::vector<ValidityVerdict> verdicts;
  std::vector<EvalRecord> records;
};

/// Scores every parsed outcome (failures are skipped), running up to
/// `max_in_flight` questions at once. Output order follows `outcomes`.
EvalBatch evaluate_outcomes(std::span<const generation::GenOutcome> outcomes,
                            std::span<const StandardVector> standards, const vecstore::VectorIndex& rpt_index,
                            vecstore::EmbeddingProvider& embedder, providers::ChatProvider& chat,
                            const StsOptions& sts, const ValidityParams& validity, std::size_t max_in_flight = 4);

struct MethodReport {
  generation::Method method = generation::Method::BasicPrompt;
  std::size_t n = 0;
  std::size_t parsed = 0;
  double mean_sts = 0.0;
  double std_sts = 0.0;
  double validity_pct = 0.0;
  double parse_failure_pct = 0.0;
  std::string embedder_tag;
  std::string provider_tag;

  friend bool operator==(const MethodReport&, const MethodReport&) = default;
};

void to_json(nlohmann::json& j, const MethodReport& report);
void from_json(const nlohmann::json& j, MethodReport& report);

/// Per-method statistics, one report per method present, in method order.
/// Parse failures count toward n and parse_failure_pct only. std_sts is the
/// sample (n-1) deviation, 0 with fewer than two parsed outcomes. Throws
/// EmptyBatch, DanglingReference (score or verdict for an unknown or failed
/// outcome) or CardinalityMismatch (a parsed outcome without exactly one of
/// each).
std::vector<MethodReport> aggregate(std::span<const generation::GenOutcome> outcomes,
                                    std::span<const AlignmentScore> alignments,
                                    std::span<const ValidityVerdict> verdicts);

}  // namespace qgen::eval
