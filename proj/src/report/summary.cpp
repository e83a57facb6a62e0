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

#include "statebench/report/summary.hpp"

#include <cmath>
#include <map>

#include "statebench/report/kendall.hpp"

namespace statebench::report {

GroupSummary summarize(const std::vector<const pipeline::EvaluatedRecord*>& records, std::optional<int> label) {
  GroupSummary s;
  s.group_label = label;
  s.n_records = records.size();
  if (records.empty()) return s;
  std::vector<double> precision, neg_edit;
  precision.reserve(records.size());
  neg_edit.reserve(records.size());
  for (const auto* r : records) {
    const auto& b = r->bundle;
    s.exact_match_rate += b.exact_match ? 1.0 : 0.0;
    s.mean_edit_distance += static_cast<double>(b.edit_distance);
    s.mean_edit_kernel += b.edit_kernel;
    s.mean_board_accuracy += b.board_accuracy;
    s.mean_recall_m += b.recall_m.value_or(0.0);
    precision.push_back(b.precision_m.value_or(0.0));
    neg_edit.push_back(-static_cast<double>(b.edit_distance));
  }
  const double n = static_cast<double>(records.size());
  s.exact_match_rate /= n;
  s.mean_edit_distance /= n;
  s.mean_edit_kernel /= n;
  s.mean_board_accuracy /= n;
  s.mean_recall_m /= n;
  for (double p : precision) s.mean_precision_m += p;
  s.mean_precision_m /= n;
  if (records.size() >= 2) {
    double ss = 0.0;
    for (double p : precision) ss += (p - s.mean_precision_m) * (p - s.mean_precision_m);
    s.se_precision_m = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    s.kendall_tau_precision_vs_neg_edit = kendall_tau_or_null(precision, neg_edit);
  }
  return s;
}

SummaryResult summarize_groups(const std::vector<pipeline::EvaluatedRecord>& records,
                               const std::vector<int>& expected_groups) {
  std::map<int, std::vector<const pipeline::EvaluatedRecord*>> groups;
  std::vector<const pipeline::EvaluatedRecord*> all;
  for (const auto& r : records) {
    groups[r.group_label].push_back(&r);
    all.push_back(&r);
  }
  SummaryResult out;
  for (int label : expected_groups) {
    if (!groups.contains(label)) ++out.empty_groups_omitted;
  }
  for (const auto& [label, members] : groups) out.rows.push_back(summarize(members, label));
  if (!all.empty()) out.rows.push_back(summarize(all, std::nullopt));
  return out;
}

}  // namespace statebench::report
