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

#include "qgen/eval/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "qgen/error.hpp"
#include "qgen/generation/prompts.hpp"
#include "qgen/parallel.hpp"
#include "qgen/text_util.hpp"

namespace qgen::eval {

using generation::GenOutcome;
using generation::Mcq;
using nlohmann::json;

namespace {

// Maxima closer than this are treated as ties.
constexpr double kTieEpsilon = 1e-12;

}  // namespace

std::string_view to_string(StsUnit unit) { return unit == StsUnit::Stem ? "stem" : "full"; }

StsUnit sts_unit_from_string(std::string_view name) {
  if (name == "stem") return StsUnit::Stem;
  if (name == "full") return StsUnit::Full;
  throw Error(Errc::InvalidConfig, "sts_unit must be 'stem' or 'full', got '" + std::string(name) + "'");
}

std::vector<StandardVector> standard_vectors(const vecstore::VectorIndex& index,
                                             std::span<const corpus::StandardChunk> standards) {
  std::vector<StandardVector> out;
  out.reserve(standards.size());
  for (const auto& s : standards) {
    if (s.chunk.strategy != corpus::ChunkStrategy::StandardSplit)
      throw Error(Errc::WrongIndexRole, "chunk " + s.chunk.chunk_id + " is not a standard chunk");
    const corpus::Chunk* c = index.find(s.chunk.chunk_id);
    if (c == nullptr) throw Error(Errc::DanglingReference, "standard chunk " + s.chunk.chunk_id + " is not indexed");
    const auto row = static_cast<std::size_t>(c - index.chunks().data());
    out.push_back({s.standard, index.vector(row)});
  }
  return out;
}

std::string scoring_text(const Mcq& mcq, StsUnit unit) {
  return unit == StsUnit::Stem ? mcq.stem : generation::full_text(mcq);
}

AlignmentScore sts_alignment(const vecstore::EmbeddingVector& question, std::span<const StandardVector> standards,
                             bool keep_per_standard) {
  if (standards.empty()) throw Error(Errc::EmptyStandards, "no standards to score against");
  std::vector<double> scores;
  scores.reserve(standards.size());
  for (const auto& s : standards) scores.push_back(vecstore::cosine_similarity(question, s.vector));

  AlignmentScore out;
  out.score = *std::max_element(scores.begin(), scores.end());
  bool have = false;
  for (std::size_t i = 0; i < standards.size(); ++i) {
    if (scores[i] < out.score - kTieEpsilon) continue;
    if (!have || corpus::standard_code_less(standards[i].standard.code, out.best_standard)) {
      out.best_standard = standards[i].standard.code;
      have = true;
    }
  }
  if (keep_per_standard) {
    out.per_standard.emplace();
    for (std::size_t i = 0; i < standards.size(); ++i) {
      auto [it, inserted] = out.per_standard->emplace(standards[i].standard.code, scores[i]);
      if (!inserted) it->second = std::max(it->second, scores[i]);
    }
  }
  return out;
}

AlignmentScore sts_alignment(const Mcq& mcq, std::span<const StandardVector> standards,
                             vecstore::EmbeddingProvider& embedder, const StsOptions& options) {
  if (standards.empty()) throw Error(Errc::EmptyStandards, "no standards to score against");
  const auto q = vecstore::embed_one(embedder, scoring_text(mcq, options.unit), options.embed);
  return sts_alignment(q, standards, options.keep_per_standard);
}

std::string_view to_string(Verdict verdict) { return verdict == Verdict::Valid ? "Valid" : "Invalid"; }

std::string_view to_string(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::AboveThresholdAnswered: return "AboveThresholdAnswered";
    case VerdictReason::BelowThreshold: return "BelowThreshold";
    case VerdictReason::Refusal: return "Refusal";
    case VerdictReason::NoMcq: return "NoMcq";
  }
  return "NoMcq";
}

Verdict verdict_from_string(std::string_view name) {
  if (name == "Valid") return Verdict::Valid;
  if (name == "Invalid") return Verdict::Invalid;
  throw Error(Errc::InvalidRequest, "unknown verdict '" + std::string(name) + "'");
}

VerdictReason verdict_reason_from_string(std::string_view name) {
  for (auto r : {VerdictReason::AboveThresholdAnswered, VerdictReason::BelowThreshold, VerdictReason::Refusal,
                 VerdictReason::NoMcq})
    if (to_string(r) == name) return r;
  throw Error(Errc::InvalidRequest, "unknown verdict reason '" + std::string(name) + "'");
}

const std::vector<std::string>& default_refusal_markers() {
  static const std::vector<std::string> markers{
      "tidak dapat dijawab", "tidak dapat menjawab", "tiada maklumat",  "cannot be answered",
      "i don't know",        "not enough information", "unable to answer",
  };
  return markers;
}

bool is_refusal(std::string_view answer, std::span<const std::string> markers) {
  if (!text::has_non_space(answer)) return true;
  const std::string lowered = text::to_lower_ascii(answer);
  return std::any_of(markers.begin(), markers.end(), [&](const std::string& m) {
    return !m.empty() && lowered.find(text::to_lower_ascii(m)) != std::string::npos;
  });
}

ValidityVerdict ragqa_validity(const Mcq& mcq, const vecstore::VectorIndex& rpt_index,
                               vecstore::EmbeddingProvider& embedder, providers::ChatProvider& chat,
                               const ValidityParams& params) {
  if (!(params.tau >= 0.0 && params.tau <= 1.0)) throw Error(Errc::InvalidRequest, "tau must lie in [0, 1]");
  if (params.k == 0) throw Error(Errc::InvalidRequest, "k must be positive");
  for (const auto& c : rpt_index.chunks())
    if (c.strategy != corpus::ChunkStrategy::StandardSplit)
      throw Error(Errc::WrongIndexRole, "validity index holds non-standard chunk " + c.chunk_id);

  ValidityVerdict v;
  if (!text::has_non_space(mcq.stem)) {
    v.reason = VerdictReason::NoMcq;
    return v;
  }
  const auto query = vecstore::embed_one(embedder, mcq.stem, params.embed);
  const auto hits = vecstore::top_k(rpt_index, query, params.k);
  v.top_score = hits.front().score;
  if (v.top_score < params.tau) {
    v.reason = VerdictReason::BelowThreshold;
    return v;
  }

  std::vector<corpus::Chunk> context;
  context.reserve(hits.size());
  for (const auto& h : hits) context.push_back(*rpt_index.find(h.chunk_id));
  const auto prompt = generation::build_prompt_qa(mcq.stem, context);
  providers::ChatRequest request;
  request.messages = {{"system", prompt.system}, {"user", prompt.user}};
  request.temperature = 0.0;
  request.task = providers::ChatTask::Answer;
  const auto reply = providers::with_retry(params.retry, params.sleeper, [&] { return chat.complete(request); });
  v.answer_text = reply.text;
  if (is_refusal(reply.text, params.refusal_markers)) {
    v.reason = VerdictReason::Refusal;
  } else {
    v.verdict = Verdict::Valid;
    v.reason = VerdictReason::AboveThresholdAnswered;
  }
  return v;
}

void to_json(json& j, const EvalRecord& r) {
  j = json{{"outcome_id", r.outcome_id},        {"method", generation::to_string(r.method)},
           {"score", r.score},                  {"best_standard", r.best_standard},
           {"verdict", to_string(r.verdict)},   {"reason", to_string(r.reason)},
           {"top_score", r.top_score}};
}

void from_json(const json& j, EvalRecord& r) {
  r.outcome_id = j.at("outcome_id").get<std::string>();
  r.method = generation::method_from_string(j.at("method").get<std::string>());
  r.score = j.at("score").get<double>();
  r.best_standard = j.at("best_standard").get<std::string>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.reason = verdict_reason_from_string(j.at("reason").get<std::string>());
  r.top_score = j.at("top_score").get<double>();
}

EvalBatch evaluate_outcomes(std::span<const GenOutcome> outcomes, std::span<const StandardVector> standards,
                            const vecstore::VectorIndex& rpt_index, vecstore::EmbeddingProvider& embedder,
                            providers::ChatProvider& chat, const StsOptions& sts, const ValidityParams& validity,
                            std::size_t max_in_flight) {
  std::vector<const GenOutcome*> parsed;
  for (const auto& o : outcomes)
    if (o.parsed()) parsed.push_back(&o);

  struct Scored {
    AlignmentScore alignment;
    ValidityVerdict verdict;
  };
  auto scored = bounded_map(parsed.size(), max_in_flight, [&](std::size_t i) {
    const GenOutcome& o = *parsed[i];
    Scored s{sts_alignment(*o.mcq(), standards, embedder, sts),
             ragqa_validity(*o.mcq(), rpt_index, embedder, chat, validity)};
    s.alignment.question_ref = o.id;
    s.verdict.question_ref = o.id;
    return s;
  });

  EvalBatch batch;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    const auto& s = scored[i];
    batch.records.push_back({parsed[i]->id, parsed[i]->request.method, s.alignment.score, s.alignment.best_standard,
                             s.verdict.verdict, s.verdict.reason, s.verdict.top_score});
    batch.alignments.push_back(std::move(scored[i].alignment));
    batch.verdicts.push_back(std::move(scored[i].verdict));
  }
  return batch;
}

void to_json(json& j, const MethodReport& r) {
  j = json{{"method", generation::to_string(r.method)},
           {"n", r.n},
           {"parsed", r.parsed},
           {"mean_sts", r.mean_sts},
           {"std_sts", r.std_sts},
           {"validity_pct", r.validity_pct},
           {"parse_failure_pct", r.parse_failure_pct},
           {"embedder_tag", r.embedder_tag},
           {"provider_tag", r.provider_tag}};
}

void from_json(const json& j, MethodReport& r) {
  r.method = generation::method_from_string(j.at("method").get<std::string>());
  r.n = j.at("n").get<std::size_t>();
  r.parsed = j.at("parsed").get<std::size_t>();
  r.mean_sts = j.at("mean_sts").get<double>();
  r.std_sts = j.at("std_sts").get<double>();
  r.validity_pct = j.at("validity_pct").get<double>();
  r.parse_failure_pct = j.at("parse_failure_pct").get<double>();
  r.embedder_tag = j.value("embedder_tag", std::string());
  r.provider_tag = j.value("provider_tag", std::string());
}

std::vector<MethodReport> aggregate(std::span<const GenOutcome> outcomes, std::span<const AlignmentScore> alignments,
                                    std::span<const ValidityVerdict> verdicts) {
  if (outcomes.empty()) throw Error(Errc::EmptyBatch, "no outcomes to aggregate");

  std::unordered_map<std::string, const GenOutcome*> by_id;
  for (const auto& o : outcomes)
    if (!by_id.emplace(o.id, &o).second) throw Error(Errc::CardinalityMismatch, "duplicate outcome id " + o.id);

  std::unordered_map<std::string, const AlignmentScore*> score_of;
  for (const auto& a : alignments) {
    auto it = by_id.find(a.question_ref);
    if (it == by_id.end() || !it->second->parsed())
      throw Error(Errc::DanglingReference, "alignment score for unknown or failed outcome '" + a.question_ref + "'");
    if (!score_of.emplace(a.question_ref, &a).second)
      throw Error(Errc::CardinalityMismatch, "two alignment scores for outcome " + a.question_ref);
  }
  std::unordered_map<std::string, const ValidityVerdict*> verdict_of;
  for (const auto& v : verdicts) {
    auto it = by_id.find(v.question_ref);
    if (it == by_id.end() || !it->second->parsed())
      throw Error(Errc::DanglingReference, "verdict for unknown or failed outcome '" + v.question_ref + "'");
    if (!verdict_of.emplace(v.question_ref, &v).second)
      throw Error(Errc::CardinalityMismatch, "two verdicts for outcome " + v.question_ref);
  }

  std::vector<MethodReport> reports;
  for (generation::Method method : generation::kAllMethods) {
    MethodReport r;
    r.method = method;
    std::vector<double> scores;
    std::size_t valid = 0;
    for (const auto& o : outcomes) {
      if (o.request.method != method) continue;
      ++r.n;
      if (r.provider_tag.empty()) r.provider_tag = o.provider_tag;
      if (r.embedder_tag.empty()) r.embedder_tag = o.embedder_tag;
      if (!o.parsed()) continue;
      auto s = score_of.find(o.id);
      auto v = verdict_of.find(o.id);
      if (s == score_of.end() || v == verdict_of.end())
        throw Error(Errc::CardinalityMismatch, "parsed outcome " + o.id + " lacks a score or verdict");
      scores.push_back(s->second->score);
      if (v->second->verdict == Verdict::Valid) ++valid;
    }
    if (r.n == 0) continue;
    r.parsed = scores.size();
    r.parse_failure_pct = 100.0 * static_cast<double>(r.n - r.parsed) / static_cast<double>(r.n);
    if (!scores.empty()) {
      double sum = 0.0;
      for (double x : scores) sum += x;
      r.mean_sts = sum / static_cast<double>(scores.size());
      if (scores.size() > 1) {
        double ss = 0.0;
        for (double x : scores) ss += (x - r.mean_sts) * (x - r.mean_sts);
        r.std_sts = std::sqrt(ss / static_cast<double>(scores.size() - 1));
      }
      r.validity_pct = 100.0 * static_cast<double>(valid) / static_cast<double>(scores.size());
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace qgen::eval
