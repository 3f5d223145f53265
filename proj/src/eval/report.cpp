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

#include "qgen/eval/report.hpp"

#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "qgen/error.hpp"
#include "qgen/text_util.hpp"

namespace qgen::eval {

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  throw Error(Errc::InvalidConfig, "report format must be 'json' or 'markdown', got '" + std::string(name) + "'");
}

std::string render_report(std::span<const MethodReport> reports, ReportFormat format,
                          const std::optional<ReportMeta>& meta) {
  if (reports.empty()) throw Error(Errc::EmptyBatch, "no method reports to render");
  if (format == ReportFormat::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(r);
    return j.dump(2) + "\n";
  }

  std::string out = "# Question generation report\n\n";
  out += "| Method | STS Score | Std. Dev. | Validity (%) | Parse Failures (%) |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& r : reports)
    out += fmt::format("| {} | {:.2f} | {:.2f} | {:.2f} | {:.2f} |\n", generation::display_name(r.method), r.mean_sts,
                       r.std_sts, r.validity_pct, r.parse_failure_pct);
  out += "\n";
  for (const auto& r : reports)
    out += fmt::format("- {}: {} questions, {} parsed\n", generation::to_string(r.method), r.n, r.parsed);
  if (meta) {
    out += "\n";
    out += fmt::format("STS unit: {}. Validity: top retrieval score >= {:.2f} over k={} standards, then a non-refusal answer.\n",
                       to_string(meta->sts_unit), meta->tau, meta->k);
    out += fmt::format("Embedder: {}. Chat model: {}.\n", meta->embedder_tag, meta->chat_tag);
  }
  return out;
}

std::vector<ReportRow> parse_markdown_table(std::string_view markdown) {
  std::vector<ReportRow> rows;
  std::istringstream in{std::string(markdown)};
  std::string line;
  bool in_table = false;
  while (std::getline(in, line)) {
    const auto t = text::trim(line);
    if (t.empty() || t.front() != '|') {
      if (in_table) break;
      continue;
    }
    std::vector<std::string> cells;
    std::size_t pos = 1;
    while (pos < t.size()) {
      const auto bar = t.find('|', pos);
      if (bar == std::string_view::npos) break;
      cells.emplace_back(text::trim(t.substr(pos, bar - pos)));
      pos = bar + 1;
    }
    if (!in_table) {
      in_table = true;  // header
      continue;
    }
    if (cells.size() != 5) throw Error(Errc::InvalidRequest, "report row has " + std::to_string(cells.size()) + " cells");
    if (cells[1].starts_with("---")) continue;
    rows.push_back({cells[0], std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3]), std::stod(cells[4])});
  }
  return rows;
}

}  // namespace qgen::eval
