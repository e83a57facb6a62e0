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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "statebench/chess/position.hpp"

namespace statebench::chess {

/// One mainline game, moves resolved to coordinate notation from the
/// standard initial position.
struct GameRecord {
  std::string game_id;
  std::vector<UciMove> moves;
  std::map<std::string, std::string> headers;
};

struct PgnIssue {
  enum class Kind { kMalformedPgn, kIllegalSanMove };

  Kind kind;
  std::size_t game_index;  // 1-based position of the game in the input
  std::string game_id;
  std::string message;
};

struct PgnParseResult {
  std::vector<GameRecord> games;
  std::vector<PgnIssue> issues;  // games listed here are absent from `games`
};

/// Parses PGN import format. Comments, variations, NAGs and escape lines are
/// skipped. A game with a bad tag, an unterminated comment or variation, a
/// non-standard start position, or an unresolvable SAN token is reported in
/// `issues` and dropped; the remaining games are unaffected.
///
/// Game ids come from a "GameId" tag, else a URL-valued "Site" tag, else
/// `<id_prefix>-<n>`.
PgnParseResult parse_pgn(std::string_view text, std::string_view id_prefix = "game");

/// Serializes games as PGN (tags then wrapped SAN movetext).
std::string format_pgn(const std::vector<GameRecord>& games);

}  // namespace statebench::chess
