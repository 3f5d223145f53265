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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/eval/evaluate.hpp"

namespace qgen::eval {

enum class ReportFormat { Json, Markdown };

ReportFormat report_format_from_string(std::string_view name);

/// Run settings disclosed under the markdown table.
struct ReportMeta {
  double tau = 0.5;
  std::size_t k = 3;
  StsUnit sts_unit = StsUnit::Stem;
  std::string embedder_tag;
  std::string chat_tag;
};

/// Markdown: one row per report under the columns
/// Method | STS Score | Std. Dev. | Validity (%) | Parse Failures (%),
/// numbers to two decimals. Json: the reports as a JSON array.
/// Throws EmptyBatch for an empty list.
std::string render_report(std::span<const MethodReport> reports, ReportFormat format,
                          const std::optional<ReportMeta>& meta = std::nullopt);

struct ReportRow {
  std::string method;
  double sts = 0.0;
  double std_dev = 0.0;
  double validity_pct = 0.0;
  double parse_failure_pct = 0.0;
};

/// Reads the table back out of a rendered markdown report.
std::vector<ReportRow> parse_markdown_table(std::string_view markdown);

}  // namespace qgen::eval
