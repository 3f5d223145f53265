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

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgen/error.hpp"

namespace qgen::jsonl {

/// Writes one compact JSON value per line ("\n" terminated). Creates parent
/// directories. Throws Error(IoError) on failure.
void write(const std::filesystem::path& path, const std::vector<nlohmann::json>& lines);

/// Calls `on_line` for every non-blank line. Parse errors and exceptions
/// thrown by `on_line` are rethrown as Error(`code`) naming the path and the
/// 1-based line number. A missing file is Error(FileNotFound).
void read(const std::filesystem::path& path, Errc code, const std::function<void(const nlohmann::json&)>& on_line);

/// Writes `content` verbatim, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& content);
std::string read_text(const std::filesystem::path& path);

}  // namespace qgen::jsonl
