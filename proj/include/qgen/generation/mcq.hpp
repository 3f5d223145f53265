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

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

namespace qgen::generation {

struct McqOption {
  char label = 'A';
  std::string text;

  friend bool operator==(const McqOption&, const McqOption&) = default;
};

/// Multiple-choice question. Invariants (enforced by parse_mcq_json and
/// validate_mcq): options carry labels A, B, C, D in that order, option texts
/// are non-empty and pairwise distinct after whitespace normalization, and
/// answer_key names one of the labels.
struct Mcq {
  std::string stem;
  std::array<McqOption, 4> options{};
  char answer_key = 'A';
  std::string explanation;
  std::string language_tag = "ms";

  friend bool operator==(const Mcq&, const Mcq&) = default;
};

enum class ParseCategory { NotJson, MissingField, BadOptionCount, DuplicateOption, AnswerNotInOptions };

std::string_view to_string(ParseCategory category);
ParseCategory parse_category_from_string(std::string_view name);

/// A model reply that could not be turned into an Mcq. raw_text is the reply
/// exactly as received.
struct ParseFailure {
  std::string raw_text;
  ParseCategory category = ParseCategory::NotJson;
  std::string diagnostic;

  friend bool operator==(const ParseFailure&, const ParseFailure&) = default;
};

using McqParseResult = std::variant<Mcq, ParseFailure>;

/// Parses a model reply. Strips one surrounding markdown code fence, parses
/// JSON, then maps fields tolerantly:
///   stem        <- "stem" | "question" | "soalan"
///   options     <- "options" | "choices" | "pilihan"; an array of strings,
///                  an array of {label, text} objects, or an {"A": ...} map
///   answer_key  <- "answer_key" | "answer" | "correct_answer" | "jawapan";
///                  a label ("B", "b", "B)") or the full text of an option
///   explanation <- "explanation" | "penerangan" | "huraian" (optional)
/// Never throws.
McqParseResult parse_mcq_json(std::string_view raw);

/// Strips a single ```/```json fence wrapping the whole reply, if present.
std::string_view strip_code_fence(std::string_view raw);

void to_json(nlohmann::json& j, const Mcq& mcq);
/// Strict inverse of to_json (the persisted form, not model output).
void from_json(const nlohmann::json& j, Mcq& mcq);
void to_json(nlohmann::json& j, const ParseFailure& failure);
void from_json(const nlohmann::json& j, ParseFailure& failure);

/// Text used for embedding: the stem alone, or stem + options + explanation.
std::string full_text(const Mcq& mcq);

}  // namespace qgen::generation
