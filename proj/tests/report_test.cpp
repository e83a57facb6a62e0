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

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "statebench/report/emit.hpp"
#include "statebench/report/kendall.hpp"
#include "statebench/report/studies.hpp"
#include "statebench/report/summary.hpp"
#include "statebench/rng.hpp"

namespace statebench::report {
namespace {

namespace fs = std::filesystem;
using pipeline::EvaluatedRecord;

// ---------------------------------------------------------------- Kendall

TEST(KendallTest, PerfectAgreementAndReversal) {
  const std::vector<double> x{1, 2, 3, 4, 5};
  const std::vector<double> up{10, 20, 30, 40, 50};
  const std::vector<double> down{5, 4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(kendall_tau(x, up), 1.0);
  EXPECT_DOUBLE_EQ(kendall_tau(x, down), -1.0);
}

TEST(KendallTest, TiesMatchPairCounting) {
  // C = 7, D = 0, ties only in x: 2, ties only in y: 1, so 7 / sqrt(9 * 8)
  // (scipy.stats.kendalltau agrees: 0.8249579...).
  const std::vector<double> x{1, 1, 2, 3, 3};
  const std::vector<double> y{1, 2, 2, 3, 4};
  EXPECT_NEAR(kendall_tau(x, y), testing::kendall_tau_b_pairs(x, y), 1e-12);
  EXPECT_NEAR(kendall_tau(x, y), 7.0 / std::sqrt(72.0), 1e-12);
}

TEST(KendallTest, RandomInputsMatchPairCounting) {
  auto rng = make_engine(17, 0);
  std::uniform_int_distribution<int> small(0, 5);
  std::normal_distribution<double> noise;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 60;
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = trial % 2 == 0 ? small(rng) : noise(rng);
      y[i] = trial % 3 == 0 ? small(rng) : x[i] + noise(rng);
    }
    const auto expected = [&]() -> std::optional<double> {
      const double v = testing::kendall_tau_b_pairs(x, y);
      return std::isfinite(v) ? std::optional<double>(v) : std::nullopt;
    }();
    const auto got = kendall_tau_or_null(x, y);
    ASSERT_EQ(got.has_value(), expected.has_value()) << "trial " << trial;
    if (got) {
      EXPECT_NEAR(*got, *expected, 1e-12) << "trial " << trial;
      EXPECT_LE(std::abs(*got), 1.0 + 1e-12);
    }
  }
}

TEST(KendallTest, SymmetricAndAntisymmetric) {
  auto rng = make_engine(18, 0);
  std::uniform_int_distribution<int> d(0, 9);
  std::vector<double> x(40), y(40), neg_y(40);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = d(rng);
    y[i] = d(rng);
    neg_y[i] = -y[i];
  }
  EXPECT_NEAR(kendall_tau(x, y), kendall_tau(y, x), 1e-12);
  EXPECT_NEAR(kendall_tau(x, neg_y), -kendall_tau(x, y), 1e-12);
}

TEST(KendallTest, DegenerateAndInvalidInput) {
  const std::vector<double> constant{2, 2, 2};
  const std::vector<double> varying{1, 2, 3};
  EXPECT_THROW(kendall_tau(constant, varying), DegenerateInput);
  EXPECT_THROW(kendall_tau(varying, constant), DegenerateInput);
  EXPECT_FALSE(kendall_tau_or_null(constant, varying).has_value());
  EXPECT_THROW(kendall_tau(std::vector<double>{1}, std::vector<double>{1}), std::invalid_argument);
  EXPECT_THROW(kendall_tau(varying, std::vector<double>{1, 2}), std::invalid_argument);
}

// ---------------------------------------------------------------- summary

EvaluatedRecord make_row(int group, std::size_t edit, bool exact, double board, std::optional<double> precision,
                         std::optional<double> recall, std::string id) {
  EvaluatedRecord r;
  r.record_id = id;
  r.game_id = id;
  r.group_label = group;
  r.truncation_length = group;
  r.parse_status = pipeline::ParseStatus::kOk;
  r.bundle.exact_match = exact;
  r.bundle.edit_distance = edit;
  r.bundle.edit_kernel = std::exp(-0.1 * static_cast<double>(edit));
  r.bundle.board_accuracy = board;
  r.bundle.precision_m = precision;
  r.bundle.recall_m = recall;
  r.bundle.depth_m = 4;
  return r;
}

TEST(SummaryTest, HandComputedGroups) {
  const std::vector<EvaluatedRecord> rows{
      make_row(15, 2, false, 0.5, 0.2, 0.4, "c"),
      make_row(5, 0, true, 1.0, 1.0, 1.0, "a"),
      make_row(5, 4, false, 0.75, 0.5, 0.25, "b"),
      make_row(15, 6, false, 0.25, std::nullopt, std::nullopt, "d"),
  };
  const auto result = summarize_groups(rows, {5, 15, 25});
  EXPECT_EQ(result.empty_groups_omitted, 1u);
  ASSERT_EQ(result.rows.size(), 3u);

  const auto& g5 = result.rows[0];
  EXPECT_EQ(g5.group_label, 5);
  EXPECT_EQ(g5.n_records, 2u);
  EXPECT_DOUBLE_EQ(g5.exact_match_rate, 0.5);
  EXPECT_DOUBLE_EQ(g5.mean_edit_distance, 2.0);
  EXPECT_DOUBLE_EQ(g5.mean_board_accuracy, 0.875);
  EXPECT_DOUBLE_EQ(g5.mean_precision_m, 0.75);
  EXPECT_DOUBLE_EQ(g5.mean_recall_m, 0.625);
  // sample std of {1, 0.5} is sqrt(0.125); divided by sqrt(2).
  EXPECT_NEAR(g5.se_precision_m, 0.25, 1e-12);
  EXPECT_NEAR(*g5.kendall_tau_precision_vs_neg_edit, 1.0, 1e-12);

  const auto& g15 = result.rows[1];
  EXPECT_EQ(g15.group_label, 15);
  EXPECT_DOUBLE_EQ(g15.mean_precision_m, 0.1);  // missing counts as 0
  EXPECT_DOUBLE_EQ(g15.mean_edit_distance, 4.0);

  const auto& all = result.rows[2];
  EXPECT_FALSE(all.group_label.has_value());
  EXPECT_EQ(all.n_records, 4u);
  EXPECT_DOUBLE_EQ(all.exact_match_rate, 0.25);
  EXPECT_DOUBLE_EQ(all.mean_edit_distance, 3.0);
  EXPECT_DOUBLE_EQ(all.mean_precision_m, (0.2 + 1.0 + 0.5 + 0.0) / 4);
  const std::vector<double> p{0.2, 1.0, 0.5, 0.0};
  const std::vector<double> neg_edit{-2, 0, -4, -6};
  EXPECT_NEAR(*all.kendall_tau_precision_vs_neg_edit, testing::kendall_tau_b_pairs(p, neg_edit), 1e-12);
}

TEST(SummaryTest, AllPerfectHasNoTau) {
  std::vector<EvaluatedRecord> rows;
  for (int i = 0; i < 5; ++i) rows.push_back(make_row(5, 0, true, 1.0, 1.0, 1.0, std::to_string(i)));
  const auto result = summarize_groups(rows);
  ASSERT_EQ(result.rows.size(), 2u);
  EXPECT_FALSE(result.rows[0].kendall_tau_precision_vs_neg_edit.has_value());
  EXPECT_DOUBLE_EQ(result.rows[0].exact_match_rate, 1.0);
  EXPECT_DOUBLE_EQ(result.rows[0].se_precision_m, 0.0);
}

TEST(SummaryTest, EmptyInput) {
  const auto result = summarize_groups({}, {5});
  EXPECT_EQ(result.empty_groups_omitted, 1u);
  EXPECT_TRUE(result.rows.empty());
}

// ---------------------------------------------------------------- emit

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

TEST(EmitTest, CsvHeaderOnlyForNoRows) {
  const auto csv = summaries_to_csv({});
  const auto lines = split(csv, '\n');
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(split(lines[0], ','), summary_columns());
  EXPECT_EQ(summary_columns().front(), "group_label");
  EXPECT_EQ(summary_columns().back(), "kendall_tau_precision_vs_neg_edit");
}

TEST(EmitTest, CsvRowFollowsColumnOrder) {
  const std::vector<EvaluatedRecord> rows{make_row(5, 0, true, 1.0, 1.0, 1.0, "a")};
  const auto summary = summarize_groups(rows);
  const auto lines = split(summaries_to_csv(summary.rows), '\n');
  ASSERT_EQ(lines.size(), 3u);
  const auto cells = split(lines[1], ',');
  ASSERT_EQ(cells.size(), summary_columns().size());
  EXPECT_EQ(cells[0], "5");
  EXPECT_EQ(cells[1], "1");
  EXPECT_EQ(cells[2], "1");
  EXPECT_EQ(cells.back(), "NA");
  EXPECT_EQ(split(lines[2], ',')[0], "all");
}

TEST(EmitTest, JsonFieldsAndNull) {
  const std::vector<EvaluatedRecord> rows{make_row(5, 0, true, 1.0, 1.0, 1.0, "a"),
                                          make_row(5, 3, false, 0.5, 0.5, 0.5, "b")};
  const auto j = nlohmann::json::parse(summaries_to_json(summarize_groups(rows).rows));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  for (const auto& col : summary_columns()) EXPECT_TRUE(j[0].contains(col)) << col;
  EXPECT_EQ(j[0].size(), summary_columns().size());
  EXPECT_EQ(j[1]["group_label"], "all");
  EXPECT_DOUBLE_EQ(j[0]["kendall_tau_precision_vs_neg_edit"].get<double>(), 1.0);

  const auto single = nlohmann::json::parse(summaries_to_json(summarize_groups({rows[0]}).rows));
  EXPECT_TRUE(single[0]["kendall_tau_precision_vs_neg_edit"].is_null());
}

TEST(EmitTest, PerRecordOutputs) {
  auto quoted = make_row(5, 1, false, 0.9, std::nullopt, std::nullopt, "x,\"y\":5");
  const auto csv = records_to_csv({quoted});
  EXPECT_NE(csv.find("\"x,\"\"y\"\":5\""), std::string::npos);
  EXPECT_NE(csv.find(",NA,NA,"), std::string::npos);
  const auto j = nlohmann::json::parse(records_to_json({quoted}));
  EXPECT_EQ(j[0]["record_id"], "x,\"y\":5");
  EXPECT_EQ(j[0].size(), record_columns().size());
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a\nb"), "\"a\nb\"");
}

TEST(EmitTest, WritesFilesDeterministically) {
  const fs::path dir = fs::temp_directory_path() / ("statebench-emit-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<EvaluatedRecord> rows{make_row(5, 0, true, 1.0, 1.0, 1.0, "a"),
                                          make_row(15, 3, false, 0.5, 0.5, 0.5, "b")};
  const auto summary = summarize_groups(rows).rows;
  ReportConfig config;
  config.output_path = dir / "summary.csv";
  config.include_per_record = true;
  emit_report(summary, rows, config);
  EXPECT_EQ(per_record_path(config.output_path), dir / "summary.records.csv");
  ASSERT_TRUE(fs::exists(dir / "summary.records.csv"));
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const auto first = slurp(config.output_path);
  EXPECT_EQ(first, summaries_to_csv(summary));
  emit_report(summary, rows, config);
  EXPECT_EQ(slurp(config.output_path), first);

  config.output_path = dir / "missing-dir" / "x" / "s.csv";
  fs::create_directories(dir / "missing-dir");
  std::ofstream(dir / "missing-dir" / "x") << "a file, not a directory";
  EXPECT_THROW(emit_report(summary, rows, config), IoError);
  fs::remove_all(dir);
}

// ---------------------------------------------------------------- studies

TEST(StudiesTest, TreeStudyShape) {
  TreeStudyConfig config;
  config.max_depth = 3;
  config.runs = 4;
  config.max_frontier = 50;
  const auto rows = homogeneous_tree_study(config);
  ASSERT_EQ(rows.size(), 2u * 2u * 3u);
  for (const auto& r : rows) {
    EXPECT_DOUBLE_EQ(r.target, std::pow(0.75, r.m));
    EXPECT_GE(r.mean, 0.0);
    EXPECT_LE(r.mean, 1.0);
  }
  EXPECT_EQ(homogeneous_tree_study(config), rows);
  const auto csv = tree_study_to_csv(rows);
  EXPECT_EQ(split(csv, '\n').size(), rows.size() + 1);
}

TEST(StudiesTest, SampleStd) {
  EXPECT_DOUBLE_EQ(sample_std({1.0, 3.0}), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(sample_std({4.0, 4.0, 4.0}), 0.0);
}

}  // namespace
}  // namespace statebench::report
