// Copyright 2026 The Statebench Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "statebench/pipeline/evaluate.hpp"
#include "statebench/report/summary.hpp"

namespace statebench::report {

enum class ReportFormat { kCsv, kJson };

struct ReportConfig {
  ReportFormat output_format = ReportFormat::kCsv;
  std::filesystem::path output_path;
  /// Also writes per-record scores next to the summary, at
  /// per_record_path(output_path).
  bool include_per_record = false;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Summary columns, in output order.
const std::vector<std::string>& summary_columns();
/// Per-record columns, in output order.
const std::vector<std::string>& record_columns();

/// Header line plus one line per row. The overall row's label is "all";
/// an undefined tau is "NA".
std::string summaries_to_csv(const std::vector<GroupSummary>& rows);
/// Array of objects keyed by summary_columns(); undefined values are null.
std::string summaries_to_json(const std::vector<GroupSummary>& rows);

std::string records_to_csv(const std::vector<pipeline::EvaluatedRecord>& records);
std::string records_to_json(const std::vector<pipeline::EvaluatedRecord>& records);

/// "<dir>/<stem>.records<ext>".
std::filesystem::path per_record_path(const std::filesystem::path& output_path);

/// Writes the report file(s). Throws IoError.
void emit_report(const std::vector<GroupSummary>& rows, const std::vector<pipeline::EvaluatedRecord>& records,
                 const ReportConfig& config);

/// Minimal RFC 4180 quoting.
std::string csv_field(const std::string& text);

}  // namespace statebench::report
