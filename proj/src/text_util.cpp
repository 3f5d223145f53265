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

#include "qgen/text_util.hpp"

#include <cstdio>

namespace qgen::text {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\f' || c == '\v'; }

bool is_space(char c) { return is_blank(c) || c == '\n' || c == '\r'; }

bool is_token_byte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

std::string normalize_whitespace(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < in.size(); ++i) {
    char c = in[i];
    if (c == '\r') {
      if (i + 1 < in.size() && in[i + 1] == '\n') continue;
      c = '\n';
    }
    if (c == '\n') {
      pending_space = false;
      while (!out.empty() && out.back() == ' ') out.pop_back();
      out.push_back('\n');
      continue;
    }
    if (is_blank(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty() && out.back() != '\n') out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return std::string(trim(out));
}

std::string squash_whitespace(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  bool pending = false;
  for (char c : in) {
    if (is_space(c)) {
      pending = true;
      continue;
    }
    if (pending && !out.empty()) out.push_back(' ');
    pending = false;
    out.push_back(c);
  }
  return out;
}

std::string_view trim(std::string_view in) {
  std::size_t b = 0;
  std::size_t e = in.size();
  while (b < e && is_space(in[b])) ++b;
  while (e > b && is_space(in[e - 1])) --e;
  return in.substr(b, e - b);
}

std::string to_lower_ascii(std::string_view in) {
  std::string out(in);
  for (char& c : out) c = lower(c);
  return out;
}

bool has_non_space(std::string_view in) {
  for (char c : in)
    if (!is_space(c)) return true;
  return false;
}

bool starts_with_word(std::string_view text, std::string_view prefix) {
  if (prefix.empty() || text.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (lower(text[i]) != lower(prefix[i])) return false;
  if (text.size() == prefix.size()) return true;
  const auto next = static_cast<unsigned char>(text[prefix.size()]);
  const bool letter = (next >= 'a' && next <= 'z') || (next >= 'A' && next <= 'Z') || next >= 0x80;
  return !letter;
}

std::vector<std::string> word_tokens(std::string_view in) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : in) {
    if (is_token_byte(static_cast<unsigned char>(c))) {
      current.push_back(lower(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::size_t utf8_length(std::string_view in) {
  std::size_t n = 0;
  for (unsigned char c : in)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace qgen::text
