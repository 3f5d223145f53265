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

#include "qgen/corpus/loader.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qgen/error.hpp"
#include "qgen/text_util.hpp"

namespace qgen::corpus {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(std::string_view origin, const std::string& what) {
  throw Error(Errc::MalformedBlocksFile, std::string(origin) + ": " + what);
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

double number_field(const json& obj, const char* key, const std::string& path, std::string_view origin) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(origin, path + "." + key + ": missing");
  if (!it->is_number()) malformed(origin, path + "." + key + ": expected a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) malformed(origin, path + "." + key + ": not finite");
  return v;
}

Block parse_block(const json& jb, int page, const std::string& path, std::string_view origin) {
  if (!jb.is_object()) malformed(origin, path + ": expected an object");
  Block block;
  block.page = page;

  auto text_it = jb.find("text");
  if (text_it == jb.end() || !text_it->is_string()) malformed(origin, path + ".text: missing or not a string");
  block.text = text::normalize_whitespace(text_it->get<std::string>());
  if (!text::has_non_space(block.text)) malformed(origin, path + ".text: blank");

  auto bbox_it = jb.find("bbox");
  if (bbox_it == jb.end() || !bbox_it->is_array() || bbox_it->size() != 4)
    malformed(origin, path + ".bbox: expected [x0, y0, x1, y1]");
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& v = (*bbox_it)[i];
    if (!v.is_number() || !std::isfinite(v.get<double>()))
      malformed(origin, path + ".bbox[" + std::to_string(i) + "]: expected a finite number");
    block.bbox[i] = v.get<double>();
  }
  if (!(block.bbox[0] < block.bbox[2])) malformed(origin, path + ".bbox: x0 must be < x1");
  if (!(block.bbox[1] < block.bbox[3])) malformed(origin, path + ".bbox: y0 must be < y1");

  block.font_size = number_field(jb, "font_size", path, origin);
  if (!(block.font_size > 0.0)) malformed(origin, path + ".font_size: must be positive");

  if (auto fn = jb.find("font_name"); fn != jb.end() && !fn->is_null()) {
    if (!fn->is_string()) malformed(origin, path + ".font_name: expected a string");
    block.font_name = fn->get<std::string>();
  }
  return block;
}

}  // namespace

SourceDocument parse_document(std::string_view json_text, DocumentRole role, std::string_view origin) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(json_text, e.byte == 0 ? 0 : e.byte - 1);
    malformed(origin, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON");
  }
  if (!root.is_object()) malformed(origin, "top level must be an object");

  SourceDocument doc;
  auto id_it = root.find("doc_id");
  if (id_it == root.end() || !id_it->is_string() || id_it->get<std::string>().empty())
    malformed(origin, "doc_id: missing or empty");
  doc.doc_id = id_it->get<std::string>();

  auto role_it = root.find("role");
  if (role_it == root.end() || !role_it->is_string()) malformed(origin, "role: missing");
  const auto role_name = role_it->get<std::string>();
  if (role_name != "knowledge" && role_name != "standards")
    malformed(origin, "role: expected \"knowledge\" or \"standards\", got \"" + role_name + "\"");
  doc.role = role_name == "knowledge" ? DocumentRole::KnowledgeSource : DocumentRole::StandardsBlueprint;
  if (doc.role != role)
    malformed(origin, "role: file declares \"" + role_name + "\" but \"" + std::string(to_string(role)) +
                          "\" was expected");

  auto pages_it = root.find("pages");
  if (pages_it == root.end() || !pages_it->is_array()) malformed(origin, "pages: missing or not an array");

  int last_page = 0;
  for (std::size_t p = 0; p < pages_it->size(); ++p) {
    const auto& jp = (*pages_it)[p];
    const std::string path = "pages[" + std::to_string(p) + "]";
    if (!jp.is_object()) malformed(origin, path + ": expected an object");
    auto num_it = jp.find("page");
    if (num_it == jp.end() || !num_it->is_number_integer()) malformed(origin, path + ".page: expected an integer");
    Page page;
    page.number = num_it->get<int>();
    if (page.number <= 0) malformed(origin, path + ".page: must be positive");
    if (page.number <= last_page) malformed(origin, path + ".page: page numbers must be strictly increasing");
    last_page = page.number;

    auto blocks_it = jp.find("blocks");
    if (blocks_it == jp.end() || !blocks_it->is_array()) malformed(origin, path + ".blocks: missing or not an array");
    for (std::size_t b = 0; b < blocks_it->size(); ++b)
      page.blocks.push_back(
          parse_block((*blocks_it)[b], page.number, path + ".blocks[" + std::to_string(b) + "]", origin));
    doc.pages.push_back(std::move(page));
  }

  if (doc.block_count() == 0) throw Error(Errc::EmptyDocument, std::string(origin) + ": document has no blocks");
  return doc;
}

SourceDocument load_document(const std::filesystem::path& path, DocumentRole role) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw Error(Errc::FileNotFound, path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileNotFound, path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), role, path.string());
}

FlatText flatten(const SourceDocument& doc) {
  FlatText flat;
  bool first_page = true;
  for (const auto& page : doc.pages) {
    if (page.blocks.empty()) continue;
    if (!first_page) flat.text += "\n\n";
    first_page = false;
    for (std::size_t b = 0; b < page.blocks.size(); ++b) {
      if (b > 0) flat.text += '\n';
      const std::size_t start = flat.text.size();
      flat.text += page.blocks[b].text;
      flat.block_spans.push_back({start, flat.text.size()});
    }
  }
  return flat;
}

}  // namespace qgen::corpus
