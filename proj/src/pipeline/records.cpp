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

#include "statebench/pipeline/records.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "statebench/chess/fen.hpp"
#include "statebench/chess/movegen.hpp"
#include "statebench/pipeline/hash.hpp"

namespace statebench::pipeline {

namespace {

using Json = nlohmann::ordered_json;

Json task_fields(const EvalTask& task) {
  Json j;
  j["game_id"] = task.game_id;
  j["group_label"] = task.group_label;
  j["truncation_length"] = task.truncation_length;
  Json moves = Json::array();
  for (const auto& m : task.moves) moves.push_back(m.to_string());
  j["moves"] = std::move(moves);
  j["true_fen"] = chess::format_fen(task.true_state);
  return j;
}

template <class T>
T require(const Json& j, const char* key) {
  if (!j.contains(key)) throw RecordError(std::string("missing field ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw RecordError(std::string("bad type for field ") + key);
  }
}

EvalTask task_from_json(const Json& j) {
  EvalTask task;
  task.game_id = require<std::string>(j, "game_id");
  task.group_label = require<int>(j, "group_label");
  task.truncation_length = require<int>(j, "truncation_length");
  task.true_state = chess::ChessState::initial();
  for (const auto& text : require<std::vector<std::string>>(j, "moves")) {
    const auto move = chess::UciMove::parse(text);
    if (!move || !chess::is_legal_move(task.true_state, *move)) {
      throw RecordError("illegal move " + text + " in " + task.game_id);
    }
    task.moves.push_back(*move);
    task.true_state = chess::make_move(task.true_state, *move);
  }
  if (static_cast<int>(task.moves.size()) != task.truncation_length) {
    throw RecordError("move count does not match truncation_length for " + task.game_id);
  }
  if (chess::format_fen(task.true_state) != require<std::string>(j, "true_fen")) {
    throw RecordError("true_fen does not match the moves of " + task.game_id);
  }
  return task;
}

Json parse_line(std::string_view line) {
  try {
    return Json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw RecordError(std::string("invalid JSON: ") + e.what());
  }
}

template <class F>
void for_each_line(const std::filesystem::path& path, F&& f) {
  std::ifstream in(path);
  if (!in) throw RecordError("cannot read " + path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      f(line);
    } catch (const RecordError& e) {
      throw RecordError(path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
}

}  // namespace

EvalRecord make_record(const EvalTask& task, std::string raw_response, std::string model_name,
                       std::string prompt_fingerprint) {
  EvalRecord r;
  r.task = task;
  auto parsed = parse_prediction(raw_response);
  r.raw_response = std::move(raw_response);
  r.predicted_state = std::move(parsed.state);
  r.predicted_fen = std::move(parsed.fen_text);
  r.parse_status = parsed.status;
  r.model_name = std::move(model_name);
  r.prompt_fingerprint = std::move(prompt_fingerprint);
  return r;
}

std::string record_to_json_line(const EvalRecord& record) {
  Json j = task_fields(record.task);
  j["raw_response"] = record.raw_response;
  j["predicted_fen"] = record.predicted_fen ? Json(*record.predicted_fen) : Json(nullptr);
  j["parse_status"] = std::string(to_string(record.parse_status));
  j["model_name"] = record.model_name;
  j["prompt_fingerprint"] = record.prompt_fingerprint;
  return j.dump();
}

EvalRecord record_from_json_line(std::string_view line) {
  const Json j = parse_line(line);
  if (!j.is_object() || j.size() != 10) throw RecordError("a record line holds exactly 10 fields");
  const auto status = parse_status_from_string(require<std::string>(j, "parse_status"));
  if (!status) throw RecordError("unknown parse_status");
  EvalRecord r = make_record(task_from_json(j), require<std::string>(j, "raw_response"),
                             require<std::string>(j, "model_name"), require<std::string>(j, "prompt_fingerprint"));
  if (r.parse_status != *status) throw RecordError("parse_status disagrees with raw_response");
  const auto& stored_fen = j.at("predicted_fen");
  const std::optional<std::string> fen =
      stored_fen.is_null() ? std::nullopt : std::optional<std::string>(require<std::string>(j, "predicted_fen"));
  if (fen != r.predicted_fen) throw RecordError("predicted_fen disagrees with raw_response");
  return r;
}

std::string task_to_json_line(const EvalTask& task) { return task_fields(task).dump(); }

EvalTask task_from_json_line(std::string_view line) {
  const Json j = parse_line(line);
  if (!j.is_object()) throw RecordError("a task line must be a JSON object");
  return task_from_json(j);
}

LoadedRecords load_records(const std::filesystem::path& path) {
  LoadedRecords out;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return out;
  std::set<std::string> seen;
  for_each_line(path, [&](const std::string& line) {
    auto hash = sha256_hex(line);
    if (!seen.insert(hash).second) {
      ++out.duplicate_lines;
      return;
    }
    out.records.push_back(record_from_json_line(line));
    out.content_hashes.push_back(std::move(hash));
  });
  return out;
}

std::vector<EvalTask> load_tasks(const std::filesystem::path& path) {
  std::vector<EvalTask> out;
  for_each_line(path, [&](const std::string& line) { out.push_back(task_from_json_line(line)); });
  return out;
}

void write_tasks(const std::filesystem::path& path, const std::vector<EvalTask>& tasks) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw RecordError("cannot write " + path.string());
  for (const auto& t : tasks) out << task_to_json_line(t) << '\n';
  if (!out) throw RecordError("write failed for " + path.string());
}

RecordAppender::RecordAppender(const std::filesystem::path& path) : out_(path, std::ios::app) {
  if (!out_) throw RecordError("cannot open " + path.string() + " for appending");
}

void RecordAppender::append(const EvalRecord& record) {
  const std::string line = record_to_json_line(record);
  std::lock_guard lock(mutex_);
  out_ << line << '\n';
  out_.flush();
  if (!out_) throw RecordError("append failed");
  ++written_;
}

std::size_t RecordAppender::written() const {
  std::lock_guard lock(mutex_);
  return written_;
}

}  // namespace statebench::pipeline
