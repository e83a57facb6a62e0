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

#include "statebench/chess/sampling.hpp"

#include "statebench/chess/movegen.hpp"

namespace statebench::chess {

namespace {

std::size_t pick(std::size_t n, Engine& rng) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

}  // namespace

std::vector<UciMove> random_playout(const ChessState& start, int plies, Engine& rng) {
  std::vector<UciMove> played;
  ChessState s = start;
  MoveList moves;
  for (int i = 0; i < plies; ++i) {
    generate_legal_moves(s, moves);
    if (moves.empty()) break;
    const UciMove m = moves[pick(moves.size(), rng)];
    played.push_back(m);
    s = make_move(s, m);
  }
  return played;
}

ChessState random_reachable_state(int plies, Engine& rng) {
  ChessState s = ChessState::initial();
  for (const auto& m : random_playout(s, plies, rng)) s = make_move(s, m);
  return s;
}

ChessState random_scatter_position(const std::vector<Piece>& extra_pieces, Engine& rng) {
  for (;;) {
    ChessState s;
    std::vector<int> free(64);
    for (int i = 0; i < 64; ++i) free[i] = i;
    auto place = [&](Piece p) {
      const std::size_t k = pick(free.size(), rng);
      s.set_piece(Square(free[k]), p);
      free.erase(free.begin() + static_cast<std::ptrdiff_t>(k));
    };
    place(Piece{PieceKind::kKing, Color::kWhite});
    place(Piece{PieceKind::kKing, Color::kBlack});
    for (const auto& p : extra_pieces) {
      if (p.kind != PieceKind::kKing) place(p);
    }
    s.set_side_to_move(pick(2, rng) == 0 ? Color::kWhite : Color::kBlack);
    if (s.is_legal_position()) return s;
  }
}

ChessState perturb_pieces(const ChessState& state, int count, Engine& rng) {
  ChessState s = state;
  for (int i = 0; i < count; ++i) {
    std::vector<Square> movable;
    std::vector<Square> empty;
    for (int sq = 0; sq < 64; ++sq) {
      const auto p = s.piece_at(Square(sq));
      if (!p) {
        empty.emplace_back(sq);
      } else if (p->kind != PieceKind::kKing) {
        movable.emplace_back(sq);
      }
    }
    if (movable.empty()) break;
    const Square from = movable[pick(movable.size(), rng)];
    const Piece piece = *s.piece_at(from);
    if (pick(2, rng) == 0) {
      s.set_piece(from, std::nullopt);
      continue;
    }
    std::vector<Square> targets;
    for (Square sq : empty) {
      if (piece.kind == PieceKind::kPawn && (sq.rank() == 0 || sq.rank() == 7)) continue;
      targets.push_back(sq);
    }
    if (targets.empty()) {
      s.set_piece(from, std::nullopt);
      continue;
    }
    s.set_piece(from, std::nullopt);
    s.set_piece(targets[pick(targets.size(), rng)], piece);
  }
  return s;
}

}  // namespace statebench::chess
