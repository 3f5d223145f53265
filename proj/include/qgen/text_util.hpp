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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qgen::text {

/// Collapses runs of spaces and tabs to one space, strips spaces around each
/// newline, converts CRLF to LF and trims the ends. Newlines are preserved.
std::string normalize_whitespace(std::string_view in);

/// Collapses every whitespace run (newlines included) to a single space.
std::string squash_whitespace(std::string_view in);

std::string_view trim(std::string_view in);
std::string to_lower_ascii(std::string_view in);
bool has_non_space(std::string_view in);

/// True when `text` starts with `prefix` (ASCII case-insensitive) and the
/// prefix is not immediately followed by a letter.
bool starts_with_word(std::string_view text, std::string_view prefix);

/// Lowercased word tokens: maximal runs of ASCII alphanumerics or non-ASCII
/// bytes. Punctuation and whitespace separate tokens.
std::vector<std::string> word_tokens(std::string_view in);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t value);

/// Number of UTF-8 code points in `in` (continuation bytes are not counted).
std::size_t utf8_length(std::string_view in);

}  // namespace qgen::text
