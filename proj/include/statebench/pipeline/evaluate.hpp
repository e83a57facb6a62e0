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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "statebench/estimators.hpp"
#include "statebench/metrics.hpp"
#include "statebench/pipeline/records.hpp"

namespace statebench::pipeline {

struct EvaluationConfig {
  metrics::MetricConfig metric;
  estimators::EstimatorConfig estimator;
  std::size_t threads = 1;
};

/// Scores for one record plus the identifying fields needed downstream.
struct EvaluatedRecord {
  std::string record_id;
  std::string game_id;
  int group_label = 0;
  int truncation_length = 0;
  ParseStatus parse_status = ParseStatus::kNoFenFound;
  metrics::MetricBundle bundle;
  double precision_se = 0.0;
  double recall_se = 0.0;
  /// "ok", or why the affordance metrics are 0 ("invalid_prediction").
  std::string affordance_status = "ok";

  bool operator==(const EvaluatedRecord&) const = default;
};

/// Seed used for one record: derived from the base seed and the record id.
std::uint64_t record_seed(std::uint64_t base_seed, std::string_view record_id);

/// Metric bundle for one record. Unusable predictions score exact_match
/// false and affordance 0; edit distance is taken against the extracted text
/// (empty when none), board accuracy against its placement when that parses.
EvaluatedRecord evaluate_record(const EvalRecord& record, const EvaluationConfig& config);

/// Evaluates every record that reached the model, in input order. Results do
/// not depend on the thread count.
std::vector<EvaluatedRecord> evaluate_records(const std::vector<EvalRecord>& records,
                                              const EvaluationConfig& config);

std::string evaluated_to_json_line(const EvaluatedRecord& record);
EvaluatedRecord evaluated_from_json_line(std::string_view line);
void write_evaluated(const std::filesystem::path& path, const std::vector<EvaluatedRecord>& records);
std::vector<EvaluatedRecord> load_evaluated(const std::filesystem::path& path);

}  // namespace statebench::pipeline
