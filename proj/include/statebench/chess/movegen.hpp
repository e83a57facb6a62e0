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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "statebench/chess/position.hpp"

namespace statebench::chess {

/// Fixed-capacity move buffer for the hot paths. 256 exceeds the known
/// maximum of 218 legal moves in any position.
class MoveList {
 public:
  void push_back(const UciMove& m) { moves_[size_++] = m; }
  void clear() { size_ = 0; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const UciMove& operator[](std::size_t i) const { return moves_[i]; }
  const UciMove* begin() const { return moves_.data(); }
  const UciMove* end() const { return moves_.data() + size_; }
  bool contains(const UciMove& m) const;

 private:
  std::array<UciMove, 256> moves_;
  std::size_t size_ = 0;
};

/// Fills `out` with the legal moves of a legal position. Castling, en passant
/// and promotions included; moves leaving the mover's king attacked are not.
/// Repetition and move-count draw rules do not restrict the set.
void generate_legal_moves(const ChessState& state, MoveList& out);
std::vector<UciMove> legal_moves(const ChessState& state);

bool is_legal_move(const ChessState& state, const UciMove& move);
bool has_legal_move(const ChessState& state);

/// Plays a move taken from `legal_moves(state)`. Behaviour for any other
/// move is unspecified.
ChessState make_move(const ChessState& state, const UciMove& move);

bool is_checkmate(const ChessState& state);
bool is_stalemate(const ChessState& state);

/// Number of legal move sequences of exactly `depth` plies. With
/// `parallel`, first-ply subtrees are counted on separate threads.
std::uint64_t perft(const ChessState& state, int depth, bool parallel = false);

}  // namespace statebench::chess
