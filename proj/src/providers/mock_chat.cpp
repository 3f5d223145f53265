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

#include "qgen/providers/mock_chat.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <cmath>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "qgen/generation/prompts.hpp"
#include "qgen/text_util.hpp"

namespace qgen::providers {
namespace {

using nlohmann::json;

struct GenericItem {
  const char* stem;
  std::array<const char*, 4> options;
  char key;
};

// Off-corpus questions of the kind an ungrounded model writes for the topic.
constexpr std::array<GenericItem, 8> kGenericBank{{
    {"Apakah definisi integer?",
     {"Nombor yang boleh ditulis sebagai pecahan", "Nombor bulat positif, nombor bulat negatif dan sifar",
      "Nombor dengan titik perpuluhan", "Hanya nombor positif"},
     'B'},
    {"Selesaikan: 5 + (-3)", {"8", "2", "-2", "-8"}, 'B'},
    {"Antara berikut, yang manakah nombor perdana?", {"21", "27", "29", "33"}, 'C'},
    {"Berapakah hasil darab 12 dan 11?", {"121", "132", "144", "112"}, 'B'},
    {"Bundarkan 3.456 kepada dua tempat perpuluhan.", {"3.45", "3.46", "3.5", "3.4"}, 'B'},
    {"Apakah gandaan sepunya terkecil bagi 4 dan 6?", {"12", "24", "2", "10"}, 'A'},
    {"Manakah antara berikut ialah pecahan wajar?", {"7/5", "9/4", "3/8", "11/2"}, 'C'},
    {"Apakah nilai tempat bagi digit 7 dalam 4 725?", {"Sa", "Puluh", "Ratus", "Ribu"}, 'C'},
}};

constexpr std::array<const char*, 4> kGroundedOptions{
    "Pernyataan itu betul seperti yang ditunjukkan dalam nota",
    "Pernyataan itu hanya benar bagi nombor positif",
    "Pernyataan itu bercanggah dengan contoh dalam nota",
    "Pernyataan itu tidak berkaitan dengan topik ini",
};

std::string user_text(const ChatRequest& request) {
  std::string out;
  for (const auto& m : request.messages)
    if (m.role == "user") out += m.content;
  return out;
}

// Opening words of a context block: whole lines until at least six word
// tokens are collected, capped at forty tokens.
std::string lead_of(const std::string& context) {
  std::string lead;
  std::size_t tokens = 0;
  std::size_t pos = 0;
  while (pos < context.size() && tokens < 6) {
    auto nl = context.find('\n', pos);
    if (nl == std::string::npos) nl = context.size();
    const auto line = text::trim(std::string_view(context).substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty()) continue;
    if (!lead.empty()) lead += ' ';
    lead += line;
    tokens = text::word_tokens(lead).size();
  }
  // Stop at the first clause end (":" or sentence punctuation followed by a
  // space) once four tokens are in.
  {
    std::size_t seen = 0;
    bool in_token = false;
    for (std::size_t i = 0; i < lead.size(); ++i) {
      const auto c = static_cast<unsigned char>(lead[i]);
      const bool tok = std::isalnum(c) || c >= 0x80;
      if (tok && !in_token) ++seen;
      in_token = tok;
      const bool clause_end =
          c == ':' || ((c == '.' || c == '?' || c == '!') && (i + 1 == lead.size() || lead[i + 1] == ' '));
      if (clause_end && seen >= 4) {
        lead.resize(i);
        break;
      }
    }
  }
  auto words = text::word_tokens(lead);
  if (words.size() > 40) {
    // Cut after the fortieth token boundary in the original text.
    std::size_t seen = 0;
    bool in_token = false;
    for (std::size_t i = 0; i < lead.size(); ++i) {
      const auto c = static_cast<unsigned char>(lead[i]);
      const bool tok = std::isalnum(c) || c >= 0x80;
      if (tok && !in_token && ++seen > 40) {
        lead.resize(i);
        break;
      }
      in_token = tok;
    }
  }
  std::string out(text::trim(lead));
  while (!out.empty() && (out.back() == '.' || out.back() == ':' || out.back() == ',')) out.pop_back();
  return out;
}

json plain_reply(const std::string& stem, const std::array<std::string, 4>& options, char key,
                 const std::string& explanation) {
  return json{{"question", stem},
              {"options", {{"A", options[0]}, {"B", options[1]}, {"C", options[2]}, {"D", options[3]}}},
              {"answer", std::string(1, key)},
              {"explanation", explanation}};
}

json schema_reply(const std::string& stem, const std::array<std::string, 4>& options, char key,
                  const std::string& explanation) {
  json opts = json::array();
  for (std::size_t i = 0; i < 4; ++i) opts.push_back({{"label", std::string(1, static_cast<char>('A' + i))}, {"text", options[i]}});
  return json{{"stem", stem}, {"options", std::move(opts)}, {"answer_key", std::string(1, key)}, {"explanation", explanation}};
}

std::string malformed_reply(std::uint64_t ordinal, const std::string& stem) {
  switch (ordinal % 6) {
    case 0: {
      const std::string full =
          plain_reply(stem, {"1", "2", "3", "4"}, 'A', "Penerangan tidak lengkap").dump();
      return full.substr(0, full.size() / 2);
    }
    case 1:
      return "Berikut ialah soalan anda: " + stem + " Jawapannya ialah B kerana ia mengikut definisi.";
    case 2:
      return json{{"question", stem}, {"options", {"1", "2", "3"}}, {"answer", "A"}}.dump();
    case 3:
      return json{{"question", stem}, {"options", {"7", "7", "8", "9"}}, {"answer", "C"}}.dump();
    case 4:
      return json{{"question", stem}, {"options", {"1", "2", "3", "4"}}, {"answer", "E"}}.dump();
    default:
      return json{{"options", {"1", "2", "3", "4"}}, {"answer", "A"}, {"explanation", "Tiada soalan"}}.dump();
  }
}

}  // namespace

MockChatProvider::MockChatProvider(MockChatConfig config) : config_(config) {}

std::string MockChatProvider::tag() const {
  std::string t = "mock-chat-v1";
  if (config_.malformed_rate > 0.0) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "-malformed%.4g-seed%llu", config_.malformed_rate,
                  static_cast<unsigned long long>(config_.seed));
    t += buf;
  }
  if (config_.refusal_mode) t += "-refusal";
  return t;
}

bool MockChatProvider::malformed_at(std::uint64_t seed, double rate, std::uint64_t ordinal) {
  const auto slots = static_cast<std::size_t>(std::clamp(std::llround(rate * 100.0), 0LL, 100LL));
  if (slots == 0) return false;
  const std::uint64_t block = ordinal / 100;
  std::array<std::uint8_t, 100> perm{};
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  std::mt19937_64 rng(seed ^ (block * 0x9E3779B97F4A7C15ULL));
  for (std::size_t i = perm.size() - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
  const auto pos = static_cast<std::uint8_t>(ordinal % 100);
  return std::find(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(slots), pos) !=
         perm.begin() + static_cast<std::ptrdiff_t>(slots);
}

std::size_t MockChatProvider::scheduled_failures(std::uint64_t seed, double rate, std::uint64_t count) {
  std::size_t n = 0;
  for (std::uint64_t i = 0; i < count; ++i) n += malformed_at(seed, rate, i) ? 1 : 0;
  return n;
}

ChatResponse MockChatProvider::complete(const ChatRequest& request) {
  calls_.fetch_add(1);
  if (request.task == ChatTask::Answer) {
    answer_calls_.fetch_add(1);
    return answer(request);
  }
  const std::uint64_t ordinal =
      request.seed ? static_cast<std::uint64_t>(*request.seed) : counter_.fetch_add(1);
  return generate(request, ordinal);
}

ChatResponse MockChatProvider::generate(const ChatRequest& request, std::uint64_t ordinal) const {
  const std::string user = user_text(request);
  const auto contexts = generation::extract_context_blocks(user);

  std::string stem;
  std::array<std::string, 4> options;
  char key = 'A';
  std::string explanation;
  if (!contexts.empty()) {
    stem = "Berdasarkan nota, " + lead_of(contexts.front().second) + ". Pernyataan manakah yang betul?";
    key = static_cast<char>('A' + ordinal % 4);
    // The "correct" statement sits at the key position.
    for (std::size_t i = 0, d = 1; i < 4; ++i)
      options[i] = (static_cast<char>('A' + i) == key) ? kGroundedOptions[0] : kGroundedOptions[d++];
    explanation = "Rujuk bahagian " + contexts.front().first + " dalam nota.";
  } else {
    const auto mix = text::fnv1a64(std::to_string(ordinal), config_.seed);
    const GenericItem& item = kGenericBank[mix % kGenericBank.size()];
    stem = item.stem;
    for (std::size_t i = 0; i < 4; ++i) options[i] = item.options[i];
    key = item.key;
    explanation = "Jawapan " + std::string(1, key) + " adalah betul.";
  }

  if (request.response_schema) return {schema_reply(stem, options, key, explanation).dump()};
  if (malformed_at(config_.seed, config_.malformed_rate, ordinal)) return {malformed_reply(ordinal, stem)};
  const std::string body = plain_reply(stem, options, key, explanation).dump(2);
  if (ordinal % 3 == 0) return {"```json\n" + body + "\n```"};
  return {body};
}

ChatResponse MockChatProvider::answer(const ChatRequest& request) const {
  const auto contexts = generation::extract_context_blocks(user_text(request));
  if (config_.refusal_mode || contexts.empty()) return {std::string(kRefusal)};
  const std::string& first = contexts.front().second;
  const auto nl = first.find('\n');
  std::string line(text::trim(first.substr(0, nl)));
  while (!line.empty() && line.back() == '.') line.pop_back();
  return {"Jawapan: berdasarkan standard " + line + "."};
}

}  // namespace qgen::providers
