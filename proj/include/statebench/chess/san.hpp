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

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "statebench/chess/position.hpp"

namespace statebench::chess {

class SanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard algebraic notation for a legal move, with minimal disambiguation
/// and a "+" or "#" suffix.
std::string to_san(const ChessState& state, const UciMove& move);

/// Resolves a SAN token against the legal moves of `state`. Tolerates
/// check/mate suffixes, annotation glyphs ("!", "?"), "0-0" castling, a
/// missing "x" and a missing "=" before the promotion piece. Throws SanError
/// when no legal move or more than one legal move matches.
UciMove parse_san(const ChessState& state, std::string_view token);

/// Numbered SAN movetext for `moves` played from `start`, e.g.
/// "1. e4 e5 2. Nf3". Starting with black to move yields "1... e5".
std::string format_movetext(const ChessState& start, std::span<const UciMove> moves);

}  // namespace statebench::chess
