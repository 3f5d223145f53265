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

#include "qgen/generation/mcq.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <set>

#include "qgen/error.hpp"
#include "qgen/text_util.hpp"

namespace qgen::generation {

using nlohmann::json;

std::string_view to_string(ParseCategory category) {
  switch (category) {
    case ParseCategory::NotJson: return "NotJson";
    case ParseCategory::MissingField: return "MissingField";
    case ParseCategory::BadOptionCount: return "BadOptionCount";
    case ParseCategory::DuplicateOption: return "DuplicateOption";
    case ParseCategory::AnswerNotInOptions: return "AnswerNotInOptions";
  }
  return "NotJson";
}

ParseCategory parse_category_from_string(std::string_view name) {
  for (auto c : {ParseCategory::NotJson, ParseCategory::MissingField, ParseCategory::BadOptionCount,
                 ParseCategory::DuplicateOption, ParseCategory::AnswerNotInOptions})
    if (to_string(c) == name) return c;
  throw Error(Errc::InvalidRequest, "unknown parse category '" + std::string(name) + "'");
}

std::string_view strip_code_fence(std::string_view raw) {
  std::string_view s = text::trim(raw);
  if (s.substr(0, 3) != "```") return s;
  const auto nl = s.find('\n');
  if (nl == std::string_view::npos) return s;  // a lone fence line is left alone
  s.remove_prefix(nl + 1);
  s = text::trim(s);
  if (s.size() >= 3 && s.substr(s.size() - 3) == "```") s = text::trim(s.substr(0, s.size() - 3));
  return s;
}

namespace {

struct Fail {
  ParseCategory category;
  std::string diagnostic;
};

const json* find_any(const json& obj, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    auto it = obj.find(k);
    if (it != obj.end() && !it->is_null()) return &*it;
  }
  return nullptr;
}

std::optional<std::string> as_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number() || v.is_boolean()) return v.dump();
  return std::nullopt;
}

std::optional<char> as_label(std::string_view s) {
  s = text::trim(s);
  if (s.size() != 1) return std::nullopt;
  char c = s[0];
  if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'Z') return std::nullopt;
  return c;
}

// "A) 8", "A. 8", "A: 8" -> "8" when the prefix names `label`.
std::string strip_label_prefix(const std::string& t, char label) {
  std::string_view s = text::trim(t);
  if (s.size() >= 3 && (s[0] == label || s[0] == label - 'A' + 'a') && (s[1] == ')' || s[1] == '.' || s[1] == ':') &&
      s[2] == ' ') {
    const auto rest = text::trim(s.substr(3));
    if (!rest.empty()) return std::string(rest);
  }
  return std::string(s);
}

std::optional<Fail> read_options(const json& v, std::array<McqOption, 4>& out) {
  std::vector<std::pair<char, std::string>> found;
  if (v.is_array()) {
    if (v.size() != 4) return Fail{ParseCategory::BadOptionCount, "expected 4 options, got " + std::to_string(v.size())};
    for (std::size_t i = 0; i < 4; ++i) {
      const json& item = v[i];
      const char expected = static_cast<char>('A' + i);
      if (item.is_object()) {
        const json* lab = find_any(item, {"label", "key", "id"});
        const json* txt = find_any(item, {"text", "value", "option", "content"});
        if (lab == nullptr || !lab->is_string()) return Fail{ParseCategory::MissingField, "option label missing"};
        if (txt == nullptr || !as_text(*txt)) return Fail{ParseCategory::MissingField, "option text missing"};
        const auto l = as_label(lab->get<std::string>());
        if (!l) return Fail{ParseCategory::BadOptionCount, "option label '" + lab->get<std::string>() + "' is not A-D"};
        found.emplace_back(*l, *as_text(*txt));
      } else if (auto t = as_text(item)) {
        found.emplace_back(expected, strip_label_prefix(*t, expected));
      } else {
        return Fail{ParseCategory::MissingField, "option " + std::string(1, expected) + " has no text"};
      }
    }
  } else if (v.is_object()) {
    if (v.size() != 4) return Fail{ParseCategory::BadOptionCount, "expected 4 options, got " + std::to_string(v.size())};
    for (const auto& [key, val] : v.items()) {
      const auto l = as_label(key);
      if (!l) return Fail{ParseCategory::BadOptionCount, "option label '" + key + "' is not A-D"};
      const auto t = as_text(val);
      if (!t) return Fail{ParseCategory::MissingField, "option " + key + " has no text"};
      found.emplace_back(*l, *t);
    }
  } else {
    return Fail{ParseCategory::MissingField, "options must be an array or an object"};
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < 4; ++i) {
    if (found[i].first != static_cast<char>('A' + i))
      return Fail{ParseCategory::BadOptionCount, "option labels must be exactly A, B, C, D"};
    out[i] = {found[i].first, std::string(text::trim(found[i].second))};
    if (out[i].text.empty()) return Fail{ParseCategory::MissingField, "option " + std::string(1, out[i].label) + " is empty"};
  }
  return std::nullopt;
}

std::optional<Fail> read_answer(const json& v, const std::array<McqOption, 4>& options, char& key) {
  if (!v.is_string()) return Fail{ParseCategory::AnswerNotInOptions, "answer is not a label: " + v.dump()};
  const std::string raw = v.get<std::string>();
  std::string_view s = text::trim(raw);
  std::optional<char> label = as_label(s);
  if (!label && s.size() >= 2 && (s[1] == ')' || s[1] == '.' || s[1] == ':')) label = as_label(s.substr(0, 1));
  if (label) {
    if (*label >= 'A' && *label <= 'D') {
      key = *label;
      return std::nullopt;
    }
    return Fail{ParseCategory::AnswerNotInOptions, "answer '" + raw + "' is not one of A-D"};
  }
  const std::string wanted = text::squash_whitespace(s);
  for (const auto& o : options) {
    if (text::squash_whitespace(o.text) == wanted) {
      key = o.label;
      return std::nullopt;
    }
  }
  return Fail{ParseCategory::AnswerNotInOptions, "answer '" + raw + "' matches no option"};
}

}  // namespace

McqParseResult parse_mcq_json(std::string_view raw) {
  auto failure = [&](ParseCategory c, std::string diag) {
    return ParseFailure{std::string(raw), c, std::move(diag)};
  };

  const std::string_view body = strip_code_fence(raw);
  json root;
  try {
    root = json::parse(std::string(body));
  } catch (const json::exception& e) {
    return failure(ParseCategory::NotJson, e.what());
  }
  if (!root.is_object()) return failure(ParseCategory::NotJson, "top-level JSON value is not an object");

  Mcq mcq;
  const json* stem = find_any(root, {"stem", "question", "soalan"});
  if (stem == nullptr || !stem->is_string() || !text::has_non_space(stem->get<std::string>()))
    return failure(ParseCategory::MissingField, "stem/question missing or empty");
  mcq.stem = std::string(text::trim(stem->get<std::string>()));

  const json* options = find_any(root, {"options", "choices", "pilihan"});
  if (options == nullptr) return failure(ParseCategory::MissingField, "options missing");
  if (auto f = read_options(*options, mcq.options)) return failure(f->category, f->diagnostic);

  std::set<std::string> seen;
  for (const auto& o : mcq.options)
    if (!seen.insert(text::squash_whitespace(o.text)).second)
      return failure(ParseCategory::DuplicateOption, "option text '" + o.text + "' appears more than once");

  const json* answer = find_any(root, {"answer_key", "answer", "correct_answer", "jawapan"});
  if (answer == nullptr) return failure(ParseCategory::MissingField, "answer missing");
  if (auto f = read_answer(*answer, mcq.options, mcq.answer_key)) return failure(f->category, f->diagnostic);

  if (const json* ex = find_any(root, {"explanation", "penerangan", "huraian"})) {
    if (auto t = as_text(*ex)) mcq.explanation = *t;
  }
  if (const json* lang = find_any(root, {"language_tag", "language"}); lang != nullptr && lang->is_string())
    mcq.language_tag = lang->get<std::string>();
  return mcq;
}

void to_json(json& j, const Mcq& mcq) {
  json options = json::array();
  for (const auto& o : mcq.options) options.push_back({{"label", std::string(1, o.label)}, {"text", o.text}});
  j = json{{"stem", mcq.stem},
           {"options", std::move(options)},
           {"answer_key", std::string(1, mcq.answer_key)},
           {"explanation", mcq.explanation},
           {"language_tag", mcq.language_tag}};
}

void from_json(const json& j, Mcq& mcq) {
  mcq.stem = j.at("stem").get<std::string>();
  const json& options = j.at("options");
  if (!options.is_array() || options.size() != 4) throw Error(Errc::InvalidRequest, "persisted MCQ needs 4 options");
  for (std::size_t i = 0; i < 4; ++i) {
    const auto label = options[i].at("label").get<std::string>();
    if (label.size() != 1 || label[0] != static_cast<char>('A' + i))
      throw Error(Errc::InvalidRequest, "persisted MCQ option labels must be A-D in order");
    mcq.options[i] = {label[0], options[i].at("text").get<std::string>()};
  }
  const auto key = j.at("answer_key").get<std::string>();
  if (key.size() != 1 || key[0] < 'A' || key[0] > 'D') throw Error(Errc::InvalidRequest, "bad answer_key " + key);
  mcq.answer_key = key[0];
  mcq.explanation = j.value("explanation", std::string());
  mcq.language_tag = j.value("language_tag", std::string("ms"));
}

void to_json(json& j, const ParseFailure& failure) {
  j = json{{"category", to_string(failure.category)}, {"diagnostic", failure.diagnostic}, {"raw_text", failure.raw_text}};
}

void from_json(const json& j, ParseFailure& failure) {
  failure.category = parse_category_from_string(j.at("category").get<std::string>());
  failure.diagnostic = j.at("diagnostic").get<std::string>();
  failure.raw_text = j.at("raw_text").get<std::string>();
}

std::string full_text(const Mcq& mcq) {
  std::string out = mcq.stem;
  for (const auto& o : mcq.options) {
    out += '\n';
    out += o.label;
    out += ") ";
    out += o.text;
  }
  if (!mcq.explanation.empty()) {
    out += '\n';
    out += mcq.explanation;
  }
  return out;
}

}  // namespace qgen::generation
