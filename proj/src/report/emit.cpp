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

#include "statebench/report/emit.hpp"

#include <fstream>

#include <fmt/core.h>
#include <nlohmann/json.hpp>

namespace statebench::report {

namespace {

using Json = nlohmann::ordered_json;

std::string number(double v) { return fmt::format("{}", v); }

std::string label_text(const std::optional<int>& label) { return label ? std::to_string(*label) : "all"; }

std::vector<std::string> summary_cells(const GroupSummary& s) {
  return {label_text(s.group_label),
          std::to_string(s.n_records),
          number(s.exact_match_rate),
          number(s.mean_edit_distance),
          number(s.mean_edit_kernel),
          number(s.mean_board_accuracy),
          number(s.mean_precision_m),
          number(s.mean_recall_m),
          number(s.se_precision_m),
          s.kendall_tau_precision_vs_neg_edit ? number(*s.kendall_tau_precision_vs_neg_edit) : "NA"};
}

Json summary_json(const GroupSummary& s) {
  Json j;
  j["group_label"] = s.group_label ? Json(*s.group_label) : Json("all");
  j["n_records"] = s.n_records;
  j["exact_match_rate"] = s.exact_match_rate;
  j["mean_edit_distance"] = s.mean_edit_distance;
  j["mean_edit_kernel"] = s.mean_edit_kernel;
  j["mean_board_accuracy"] = s.mean_board_accuracy;
  j["mean_precision_m"] = s.mean_precision_m;
  j["mean_recall_m"] = s.mean_recall_m;
  j["se_precision_m"] = s.se_precision_m;
  j["kendall_tau_precision_vs_neg_edit"] =
      s.kendall_tau_precision_vs_neg_edit ? Json(*s.kendall_tau_precision_vs_neg_edit) : Json(nullptr);
  return j;
}

std::string optional_cell(const std::optional<double>& v) { return v ? number(*v) : "NA"; }

std::vector<std::string> record_cells(const pipeline::EvaluatedRecord& r) {
  return {csv_field(r.record_id),
          csv_field(r.game_id),
          std::to_string(r.group_label),
          std::to_string(r.truncation_length),
          std::string(pipeline::to_string(r.parse_status)),
          r.bundle.exact_match ? "true" : "false",
          std::to_string(r.bundle.edit_distance),
          number(r.bundle.edit_kernel),
          number(r.bundle.board_accuracy),
          optional_cell(r.bundle.precision_m),
          optional_cell(r.bundle.recall_m),
          std::to_string(r.bundle.depth_m),
          number(r.precision_se),
          number(r.recall_se),
          r.affordance_status};
}

std::string join_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += cells[i];
  }
  return line + '\n';
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

const std::vector<std::string>& summary_columns() {
  static const std::vector<std::string> columns{
      "group_label",      "n_records",       "exact_match_rate", "mean_edit_distance",
      "mean_edit_kernel", "mean_board_accuracy", "mean_precision_m", "mean_recall_m",
      "se_precision_m",   "kendall_tau_precision_vs_neg_edit"};
  return columns;
}

const std::vector<std::string>& record_columns() {
  static const std::vector<std::string> columns{
      "record_id",   "game_id",     "group_label",  "truncation_length", "parse_status",
      "exact_match", "edit_distance", "edit_kernel", "board_accuracy",  "precision_m",
      "recall_m",    "depth_m",     "precision_se", "recall_se",         "affordance_status"};
  return columns;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string summaries_to_csv(const std::vector<GroupSummary>& rows) {
  std::string out = join_line(summary_columns());
  for (const auto& s : rows) out += join_line(summary_cells(s));
  return out;
}

std::string summaries_to_json(const std::vector<GroupSummary>& rows) {
  Json array = Json::array();
  for (const auto& s : rows) array.push_back(summary_json(s));
  return array.dump(2) + '\n';
}

std::string records_to_csv(const std::vector<pipeline::EvaluatedRecord>& records) {
  std::string out = join_line(record_columns());
  for (const auto& r : records) out += join_line(record_cells(r));
  return out;
}

std::string records_to_json(const std::vector<pipeline::EvaluatedRecord>& records) {
  Json array = Json::array();
  for (const auto& r : records) array.push_back(Json::parse(pipeline::evaluated_to_json_line(r)));
  return array.dump(2) + '\n';
}

std::filesystem::path per_record_path(const std::filesystem::path& output_path) {
  auto name = output_path.stem().string() + ".records" + output_path.extension().string();
  return output_path.parent_path() / name;
}

void emit_report(const std::vector<GroupSummary>& rows, const std::vector<pipeline::EvaluatedRecord>& records,
                 const ReportConfig& config) {
  const bool csv = config.output_format == ReportFormat::kCsv;
  write_file(config.output_path, csv ? summaries_to_csv(rows) : summaries_to_json(rows));
  if (config.include_per_record) {
    write_file(per_record_path(config.output_path), csv ? records_to_csv(records) : records_to_json(records));
  }
}

}  // namespace statebench::report
