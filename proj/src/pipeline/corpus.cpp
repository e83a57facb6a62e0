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

#include "statebench/pipeline/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "statebench/chess/movegen.hpp"
#include "statebench/rng.hpp"

namespace statebench::pipeline {

std::string EvalTask::record_id() const { return game_id + ":" + std::to_string(truncation_length); }

EvalTask make_task(const chess::GameRecord& game, int length) {
  if (length < 0 || static_cast<std::size_t>(length) >= game.moves.size()) {
    throw std::invalid_argument("game " + game.game_id + " is not longer than " + std::to_string(length) + " plies");
  }
  EvalTask task;
  task.game_id = game.game_id;
  task.moves.assign(game.moves.begin(), game.moves.begin() + length);
  task.truncation_length = length;
  task.group_label = length;
  task.true_state = chess::ChessState::initial();
  for (const auto& m : task.moves) task.true_state = chess::make_move(task.true_state, m);
  return task;
}

IngestResult ingest_games(const std::vector<chess::GameRecord>& games, const IngestConfig& config) {
  for (int length : config.group_lengths) {
    if (length < 0) throw std::invalid_argument("group lengths must be non-negative");
  }
  IngestResult result;
  std::vector<std::size_t> order(games.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Engine rng = make_engine(config.seed, 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> used(games.size(), false);

  std::vector<std::size_t> by_length(config.group_lengths.size());
  std::iota(by_length.begin(), by_length.end(), std::size_t{0});
  std::stable_sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) {
    return config.group_lengths[a] > config.group_lengths[b];
  });

  std::vector<std::vector<EvalTask>> groups(config.group_lengths.size());
  for (std::size_t g : by_length) {
    const int length = config.group_lengths[g];
    for (std::size_t idx : order) {
      if (groups[g].size() >= config.group_size) break;
      const auto& game = games[idx];
      if (used[idx] || game.moves.size() <= static_cast<std::size_t>(length)) continue;
      if (config.filter && !config.filter(game)) continue;
      used[idx] = true;
      groups[g].push_back(make_task(game, length));
    }
    if (groups[g].size() < config.group_size) {
      result.shortfalls.push_back({length, config.group_size, groups[g].size()});
    }
  }
  for (auto& group : groups) {
    for (auto& task : group) result.tasks.push_back(std::move(task));
  }
  return result;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

IngestResult ingest_corpus(const std::filesystem::path& source, const IngestConfig& config) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  if (std::filesystem::is_directory(source, ec)) {
    for (const auto& entry : std::filesystem::directory_iterator(source)) {
      if (entry.is_regular_file() && entry.path().extension() == ".pgn") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw CorpusError("no .pgn files in " + source.string());
  } else if (std::filesystem::exists(source, ec)) {
    files.push_back(source);
  } else {
    throw CorpusError("no such corpus: " + source.string());
  }

  std::vector<chess::GameRecord> games;
  std::vector<chess::PgnIssue> issues;
  for (const auto& file : files) {
    const std::string prefix = files.size() == 1 ? "game" : file.stem().string();
    auto parsed = chess::parse_pgn(read_file(file), prefix);
    for (auto& g : parsed.games) games.push_back(std::move(g));
    for (auto& i : parsed.issues) issues.push_back(std::move(i));
  }
  auto result = ingest_games(games, config);
  result.issues = std::move(issues);
  return result;
}

}  // namespace statebench::pipeline
