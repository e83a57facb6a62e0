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

#include "statebench/pipeline/evaluate.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "statebench/chess/automaton.hpp"
#include "statebench/chess/fen.hpp"
#include "statebench/rng.hpp"

namespace statebench::pipeline {

namespace {

using Json = nlohmann::ordered_json;

// First four whitespace-separated fields, or the whole text for full-FEN
// comparison.
std::string comparable_text(std::string_view fen_text, metrics::ComparisonFields fields) {
  if (fields == metrics::ComparisonFields::kFullFen) return std::string(fen_text);
  std::istringstream in{std::string(fen_text)};
  std::string out;
  std::string field;
  for (int i = 0; i < 4 && in >> field; ++i) {
    if (i > 0) out += ' ';
    out += field;
  }
  return out;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::uint64_t record_seed(std::uint64_t base_seed, std::string_view record_id) {
  return derive_seed(base_seed, fnv1a(record_id));
}

EvaluatedRecord evaluate_record(const EvalRecord& record, const EvaluationConfig& config) {
  config.metric.validate();
  config.estimator.validate();
  EvaluatedRecord out;
  out.record_id = record.task.record_id();
  out.game_id = record.task.game_id;
  out.group_label = record.task.group_label;
  out.truncation_length = record.task.truncation_length;
  out.parse_status = record.parse_status;

  const auto& truth = record.task.true_state;
  const auto& fields = config.metric.fields;
  auto& b = out.bundle;
  b.depth_m = config.estimator.depth_m;

  if (record.parse_status == ParseStatus::kOk && record.predicted_state) {
    const auto& predicted = *record.predicted_state;
    b.exact_match = metrics::exact_match(truth, predicted, fields);
    b.edit_distance =
        metrics::edit_distance(metrics::comparison_text(truth, fields), metrics::comparison_text(predicted, fields));
    b.board_accuracy = metrics::board_accuracy(truth, predicted);
    auto estimator = config.estimator;
    estimator.seed = record_seed(config.estimator.seed, out.record_id);
    const auto pr = estimators::precision_recall(chess::ChessAutomaton{}, chess::ChessAutomaton::State(truth),
                                                 chess::ChessAutomaton::State(predicted), estimator);
    b.precision_m = pr.precision.p_hat;
    b.recall_m = pr.recall.p_hat;
    out.precision_se = pr.precision.standard_error;
    out.recall_se = pr.recall.standard_error;
  } else {
    const std::string predicted_text = record.predicted_fen ? comparable_text(*record.predicted_fen, fields) : "";
    b.exact_match = false;
    b.edit_distance = metrics::edit_distance(metrics::comparison_text(truth, fields), predicted_text);
    const auto placement = record.predicted_fen ? parse_placement(*record.predicted_fen) : std::nullopt;
    b.board_accuracy = placement ? metrics::board_accuracy(truth, *placement) : 0.0;
    b.precision_m = 0.0;
    b.recall_m = 0.0;
    out.affordance_status = "invalid_prediction";
  }
  b.edit_kernel = metrics::edit_kernel(b.edit_distance, config.metric.kernel_lambda);
  return out;
}

std::vector<EvaluatedRecord> evaluate_records(const std::vector<EvalRecord>& records,
                                              const EvaluationConfig& config) {
  config.metric.validate();
  config.estimator.validate();
  std::vector<const EvalRecord*> usable;
  for (const auto& r : records) {
    if (!r.transport_failed) usable.push_back(&r);
  }
  std::vector<EvaluatedRecord> out(usable.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < usable.size(); i = next.fetch_add(1)) {
      try {
        out[i] = evaluate_record(*usable[i], config);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::max<std::size_t>(1, std::min(config.threads, usable.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::string evaluated_to_json_line(const EvaluatedRecord& r) {
  Json j;
  j["record_id"] = r.record_id;
  j["game_id"] = r.game_id;
  j["group_label"] = r.group_label;
  j["truncation_length"] = r.truncation_length;
  j["parse_status"] = std::string(to_string(r.parse_status));
  j["exact_match"] = r.bundle.exact_match;
  j["edit_distance"] = r.bundle.edit_distance;
  j["edit_kernel"] = r.bundle.edit_kernel;
  j["board_accuracy"] = r.bundle.board_accuracy;
  j["precision_m"] = optional_number(r.bundle.precision_m);
  j["recall_m"] = optional_number(r.bundle.recall_m);
  j["depth_m"] = r.bundle.depth_m;
  j["precision_se"] = r.precision_se;
  j["recall_se"] = r.recall_se;
  j["affordance_status"] = r.affordance_status;
  return j.dump();
}

EvaluatedRecord evaluated_from_json_line(std::string_view line) {
  try {
    const Json j = Json::parse(line);
    EvaluatedRecord r;
    r.record_id = j.at("record_id").get<std::string>();
    r.game_id = j.at("game_id").get<std::string>();
    r.group_label = j.at("group_label").get<int>();
    r.truncation_length = j.at("truncation_length").get<int>();
    const auto status = parse_status_from_string(j.at("parse_status").get<std::string>());
    if (!status) throw RecordError("unknown parse_status");
    r.parse_status = *status;
    r.bundle.exact_match = j.at("exact_match").get<bool>();
    r.bundle.edit_distance = j.at("edit_distance").get<std::size_t>();
    r.bundle.edit_kernel = j.at("edit_kernel").get<double>();
    r.bundle.board_accuracy = j.at("board_accuracy").get<double>();
    if (!j.at("precision_m").is_null()) r.bundle.precision_m = j.at("precision_m").get<double>();
    if (!j.at("recall_m").is_null()) r.bundle.recall_m = j.at("recall_m").get<double>();
    r.bundle.depth_m = j.at("depth_m").get<int>();
    r.precision_se = j.at("precision_se").get<double>();
    r.recall_se = j.at("recall_se").get<double>();
    r.affordance_status = j.at("affordance_status").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw RecordError(std::string("bad evaluated record: ") + e.what());
  }
}

void write_evaluated(const std::filesystem::path& path, const std::vector<EvaluatedRecord>& records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw RecordError("cannot write " + path.string());
  for (const auto& r : records) out << evaluated_to_json_line(r) << '\n';
  if (!out) throw RecordError("write failed for " + path.string());
}

std::vector<EvaluatedRecord> load_evaluated(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RecordError("cannot read " + path.string());
  std::vector<EvaluatedRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      out.push_back(evaluated_from_json_line(line));
    } catch (const RecordError& e) {
      throw RecordError(path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace statebench::pipeline
