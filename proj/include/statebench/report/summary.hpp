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
#include <optional>
#include <vector>

#include "statebench/pipeline/evaluate.hpp"

namespace statebench::report {

struct GroupSummary {
  /// Empty for the overall row.
  std::optional<int> group_label;
  std::size_t n_records = 0;
  double exact_match_rate = 0.0;
  double mean_edit_distance = 0.0;
  double mean_edit_kernel = 0.0;
  double mean_board_accuracy = 0.0;
  double mean_precision_m = 0.0;
  double mean_recall_m = 0.0;
  /// Sample standard deviation of precision_m over sqrt(n); 0 when n < 2.
  double se_precision_m = 0.0;
  /// Tau-b between precision_m and the negated edit distance; empty when
  /// undefined (fewer than two records or a constant column).
  std::optional<double> kendall_tau_precision_vs_neg_edit;

  bool operator==(const GroupSummary&) const = default;
};

struct SummaryResult {
  /// One row per group in ascending label order, then the overall row
  /// computed on the pooled records. No rows at all when there are no records.
  std::vector<GroupSummary> rows;
  /// Expected groups that had no records.
  std::size_t empty_groups_omitted = 0;
};

GroupSummary summarize(const std::vector<const pipeline::EvaluatedRecord*>& records, std::optional<int> label);

/// Records without affordance values count as precision and recall 0.
SummaryResult summarize_groups(const std::vector<pipeline::EvaluatedRecord>& records,
                               const std::vector<int>& expected_groups = {});

}  // namespace statebench::report
