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

#include "qgen/jsonl.hpp"

#include <fstream>
#include <sstream>

#include "qgen/text_util.hpp"

namespace qgen::jsonl {

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileNotFound, path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write(const std::filesystem::path& path, const std::vector<nlohmann::json>& lines) {
  std::string content;
  for (const auto& j : lines) {
    content += j.dump();
    content += '\n';
  }
  write_text(path, content);
}

void read(const std::filesystem::path& path, Errc code, const std::function<void(const nlohmann::json&)>& on_line) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileNotFound, path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!text::has_non_space(line)) continue;
    try {
      on_line(nlohmann::json::parse(line));
    } catch (const Error& e) {
      throw Error(code, path.string() + ":" + std::to_string(number) + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error(code, path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
}

}  // namespace qgen::jsonl
