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

#include <stdexcept>
#include <string>
#include <string_view>

#include "statebench/chess/position.hpp"

namespace statebench::chess {

inline constexpr std::string_view kInitialFen = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1";

class FenError : public std::runtime_error {
 public:
  enum class Kind { kMalformed, kIllegalPosition };

  FenError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Syntax-only parse: accepts 4, 5 or 6 whitespace-separated fields (missing
/// halfmove clock defaults to 0, missing fullmove number to 1). Throws
/// FenError(kMalformed). The result may violate position invariants.
ChessState parse_fen_unchecked(std::string_view text);

/// Syntax parse plus invariant validation. Throws FenError with kMalformed or
/// kIllegalPosition.
ChessState parse_fen(std::string_view text);

/// Canonical six-field FEN: KQkq castling order, lowercase en-passant square,
/// "-" for empty fields.
std::string format_fen(const ChessState& state);

/// First four FEN fields (placement, side, castling, en passant).
std::string format_fen_core(const ChessState& state);

std::string format_placement(const ChessState& state);

}  // namespace statebench::chess
