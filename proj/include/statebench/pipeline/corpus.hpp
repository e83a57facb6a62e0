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

// Turning a PGN corpus into evaluation tasks: game prefixes truncated to
// fixed lengths, grouped by length.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "statebench/chess/pgn.hpp"
#include "statebench/chess/position.hpp"

namespace statebench::pipeline {

/// One reconstruction question: the first `truncation_length` plies of a game
/// and the position they reach.
struct EvalTask {
  std::string game_id;
  std::vector<chess::UciMove> moves;
  int truncation_length = 0;  // plies
  int group_label = 0;        // the group's truncation length
  chess::ChessState true_state;

  /// "<game_id>:<truncation_length>".
  std::string record_id() const;
  bool operator==(const EvalTask&) const = default;
};

/// Default length grid, in plies.
inline const std::vector<int> kDefaultGroupLengths{5, 15, 25, 35, 50};

struct IngestConfig {
  std::vector<int> group_lengths = kDefaultGroupLengths;
  std::size_t group_size = 2000;
  std::uint64_t seed = 0;
  /// Optional extra game filter (player strength, deduplication, ...).
  std::function<bool(const chess::GameRecord&)> filter;
};

struct GroupShortfall {
  int group_label = 0;
  std::size_t requested = 0;
  std::size_t filled = 0;
};

struct IngestResult {
  std::vector<EvalTask> tasks;  // grouped in group_lengths order
  std::vector<GroupShortfall> shortfalls;
  std::vector<chess::PgnIssue> issues;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncates `game` to `length` plies and replays it. Throws
/// std::invalid_argument if the game is not strictly longer than `length`.
EvalTask make_task(const chess::GameRecord& game, int length);

/// Assigns each game to at most one group. Groups are filled from the
/// longest length down, each taking up to group_size games strictly longer
/// than its length from a seeded shuffle of the corpus. A group that cannot
/// be filled keeps what it got and is listed in `shortfalls`.
IngestResult ingest_games(const std::vector<chess::GameRecord>& games, const IngestConfig& config);

/// Reads a PGN file, or every *.pgn file of a directory in name order, and
/// ingests the parsed games. Throws CorpusError when the source is unreadable.
IngestResult ingest_corpus(const std::filesystem::path& source, const IngestConfig& config);

}  // namespace statebench::pipeline
