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

// Line-delimited JSON persistence for tasks and prediction records.

#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "statebench/pipeline/corpus.hpp"
#include "statebench/pipeline/prediction.hpp"

namespace statebench::pipeline {

struct EvalRecord {
  EvalTask task;
  std::string raw_response;
  std::optional<chess::ChessState> predicted_state;  // present iff parse_status is kOk
  std::optional<std::string> predicted_fen;          // extracted span, null when none was found
  ParseStatus parse_status = ParseStatus::kNoFenFound;
  std::string model_name;
  std::string prompt_fingerprint;

  /// Set in memory when the model could not be reached; such records are
  /// never written and are skipped by evaluation.
  bool transport_failed = false;
  std::string transport_error;
};

/// Builds a record from a raw response, parsing the prediction.
EvalRecord make_record(const EvalTask& task, std::string raw_response, std::string model_name,
                       std::string prompt_fingerprint);

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One JSON object, no trailing newline. Fields: game_id, group_label,
/// truncation_length, moves, true_fen, raw_response, predicted_fen,
/// parse_status, model_name, prompt_fingerprint.
std::string record_to_json_line(const EvalRecord& record);

/// Inverse of record_to_json_line. The prediction is re-parsed from
/// raw_response and must agree with the stored status. Throws RecordError.
EvalRecord record_from_json_line(std::string_view line);

/// Task lines carry the first five record fields.
std::string task_to_json_line(const EvalTask& task);
EvalTask task_from_json_line(std::string_view line);

struct LoadedRecords {
  std::vector<EvalRecord> records;
  /// SHA-256 of each kept line; identical lines are loaded once.
  std::vector<std::string> content_hashes;
  std::size_t duplicate_lines = 0;
};

/// Reads a records file. A missing file yields no records. Throws RecordError
/// naming the line number of the first bad line.
LoadedRecords load_records(const std::filesystem::path& path);

std::vector<EvalTask> load_tasks(const std::filesystem::path& path);
void write_tasks(const std::filesystem::path& path, const std::vector<EvalTask>& tasks);

/// Append-only writer; one line per record, flushed immediately. Safe to
/// share between threads.
class RecordAppender {
 public:
  explicit RecordAppender(const std::filesystem::path& path);

  void append(const EvalRecord& record);
  std::size_t written() const;

 private:
  mutable std::mutex mutex_;
  std::ofstream out_;
  std::size_t written_ = 0;
};

}  // namespace statebench::pipeline
