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

#include "statebench/chess/movegen.hpp"

#include <algorithm>
#include <bit>
#include <future>

#include "attacks.hpp"

namespace statebench::chess {

using detail::pop_lsb;

// Direct access to the packed fields of ChessState for the hot paths.
class MoveGenAccess {
 public:
  static Bitboard& kind(ChessState& s, PieceKind k) { return s.by_kind_[static_cast<int>(k)]; }
  static Bitboard& color(ChessState& s, Color c) { return s.by_color_[static_cast<int>(c)]; }
  static std::uint8_t castling(const ChessState& s) { return s.castling_; }
  static std::uint8_t& castling(ChessState& s) { return s.castling_; }
  static int ep(const ChessState& s) { return s.ep_; }
  static void set_ep(ChessState& s, int sq) { s.ep_ = static_cast<std::int8_t>(sq); }
  static int& halfmove(ChessState& s) { return s.halfmove_; }
  static int& fullmove(ChessState& s) { return s.fullmove_; }
  static Color& side(ChessState& s) { return s.side_; }

  static std::optional<PieceKind> kind_at(const ChessState& s, int sq) {
    const Bitboard b = Bitboard{1} << sq;
    for (int k = 0; k < 6; ++k) {
      if (s.by_kind_[k] & b) return static_cast<PieceKind>(k);
    }
    return std::nullopt;
  }
};

namespace {

using A = MoveGenAccess;

constexpr std::array<PieceKind, 4> kPromotions{PieceKind::kQueen, PieceKind::kRook, PieceKind::kBishop,
                                               PieceKind::kKnight};

// Castling bit masks cleared when a piece leaves or lands on a square.
constexpr std::array<std::uint8_t, 64> make_castle_masks() {
  std::array<std::uint8_t, 64> m{};
  for (auto& x : m) x = 0xf;
  m[0] = static_cast<std::uint8_t>(0xf & ~2);   // a1
  m[7] = static_cast<std::uint8_t>(0xf & ~1);   // h1
  m[4] = static_cast<std::uint8_t>(0xf & ~3);   // e1
  m[56] = static_cast<std::uint8_t>(0xf & ~8);  // a8
  m[63] = static_cast<std::uint8_t>(0xf & ~4);  // h8
  m[60] = static_cast<std::uint8_t>(0xf & ~12); // e8
  return m;
}
constexpr auto kCastleMasks = make_castle_masks();

void add_pawn_move(MoveList& out, int from, int to) {
  const int to_rank = to >> 3;
  if (to_rank == 0 || to_rank == 7) {
    for (PieceKind k : kPromotions) out.push_back(UciMove{Square(from), Square(to), k});
  } else {
    out.push_back(UciMove{Square(from), Square(to), std::nullopt});
  }
}

void add_targets(MoveList& out, int from, Bitboard targets) {
  while (targets) out.push_back(UciMove{Square(from), Square(pop_lsb(targets)), std::nullopt});
}

void generate_pseudo_legal(const ChessState& s, MoveList& out) {
  using namespace detail;
  const Color us = s.side_to_move();
  const Color them = opposite(us);
  const Bitboard own = s.pieces(us);
  const Bitboard enemy = s.pieces(them);
  const Bitboard occ = own | enemy;
  const Bitboard empty = ~occ;

  // Pawns.
  const int up = us == Color::kWhite ? 8 : -8;
  const int start_rank = us == Color::kWhite ? 1 : 6;
  Bitboard pawns = s.pieces(us, PieceKind::kPawn);
  const int ep = A::ep(s);
  while (pawns) {
    const int from = pop_lsb(pawns);
    const int one = from + up;
    if (one >= 0 && one < 64 && (empty & (Bitboard{1} << one))) {
      add_pawn_move(out, from, one);
      const int two = one + up;
      if ((from >> 3) == start_rank && (empty & (Bitboard{1} << two))) {
        out.push_back(UciMove{Square(from), Square(two), std::nullopt});
      }
    }
    Bitboard caps = kPawnAttacks[static_cast<int>(us)][from] & enemy;
    while (caps) add_pawn_move(out, from, pop_lsb(caps));
    if (ep >= 0 && (kPawnAttacks[static_cast<int>(us)][from] & (Bitboard{1} << ep))) {
      const int victim = ep - up;
      if (victim >= 0 && victim < 64 && (s.pieces(them, PieceKind::kPawn) & (Bitboard{1} << victim)) &&
          (empty & (Bitboard{1} << ep))) {
        out.push_back(UciMove{Square(from), Square(ep), std::nullopt});
      }
    }
  }

  Bitboard knights = s.pieces(us, PieceKind::kKnight);
  while (knights) {
    const int from = pop_lsb(knights);
    add_targets(out, from, kKnightAttacks[from] & ~own);
  }
  const Bitboard queens = s.pieces(us, PieceKind::kQueen);
  Bitboard diag = s.pieces(us, PieceKind::kBishop) | queens;
  while (diag) {
    const int from = pop_lsb(diag);
    add_targets(out, from, bishop_attacks(from, occ) & ~own);
  }
  Bitboard straight = s.pieces(us, PieceKind::kRook) | queens;
  while (straight) {
    const int from = pop_lsb(straight);
    add_targets(out, from, rook_attacks(from, occ) & ~own);
  }

  const Bitboard king = s.pieces(us, PieceKind::kKing);
  if (!king) return;
  const int ksq = std::countr_zero(king);
  add_targets(out, ksq, kKingAttacks[ksq] & ~own);

  // Castling: king and rook on their home squares, path clear, king not in
  // check and not passing through an attacked square. The landing square is
  // checked by the legality filter.
  const std::uint8_t rights = A::castling(s);
  const int home = us == Color::kWhite ? 4 : 60;
  if (ksq != home || !(rights & (us == Color::kWhite ? 3 : 12))) return;
  const Bitboard rooks = s.pieces(us, PieceKind::kRook);
  if (s.is_attacked(Square(home), them)) return;
  const std::uint8_t king_side = us == Color::kWhite ? 1 : 4;
  const std::uint8_t queen_side = us == Color::kWhite ? 2 : 8;
  if ((rights & king_side) && (rooks & (Bitboard{1} << (home + 3))) &&
      !(occ & ((Bitboard{1} << (home + 1)) | (Bitboard{1} << (home + 2)))) &&
      !s.is_attacked(Square(home + 1), them)) {
    out.push_back(UciMove{Square(home), Square(home + 2), std::nullopt});
  }
  if ((rights & queen_side) && (rooks & (Bitboard{1} << (home - 4))) &&
      !(occ & ((Bitboard{1} << (home - 1)) | (Bitboard{1} << (home - 2)) | (Bitboard{1} << (home - 3)))) &&
      !s.is_attacked(Square(home - 1), them)) {
    out.push_back(UciMove{Square(home), Square(home - 2), std::nullopt});
  }
}

bool leaves_king_safe(const ChessState& after, Color mover) {
  const Bitboard king = after.pieces(mover, PieceKind::kKing);
  if (!king) return true;
  return !after.is_attacked(Square(std::countr_zero(king)), opposite(mover));
}

std::uint64_t perft_serial(const ChessState& s, int depth) {
  MoveList moves;
  generate_legal_moves(s, moves);
  if (depth == 1) return moves.size();
  std::uint64_t n = 0;
  for (const auto& m : moves) n += perft_serial(make_move(s, m), depth - 1);
  return n;
}

}  // namespace

bool MoveList::contains(const UciMove& m) const { return std::find(begin(), end(), m) != end(); }

ChessState make_move(const ChessState& state, const UciMove& move) {
  ChessState s = state;
  const Color us = state.side_to_move();
  const Color them = opposite(us);
  const int from = move.from.index();
  const int to = move.to.index();
  const Bitboard from_bb = Bitboard{1} << from;
  const Bitboard to_bb = Bitboard{1} << to;

  const PieceKind mover = A::kind_at(state, from).value_or(PieceKind::kPawn);
  const auto captured = (state.pieces(them) & to_bb) ? A::kind_at(state, to) : std::nullopt;

  if (captured) {
    A::kind(s, *captured) &= ~to_bb;
    A::color(s, them) &= ~to_bb;
  }
  A::kind(s, mover) &= ~from_bb;
  A::color(s, us) &= ~from_bb;
  const PieceKind placed = move.promotion.value_or(mover);
  A::kind(s, placed) |= to_bb;
  A::color(s, us) |= to_bb;

  int new_ep = -1;
  if (mover == PieceKind::kPawn) {
    const int delta = to - from;
    if (delta == 16 || delta == -16) {
      new_ep = from + delta / 2;
    } else if (!captured && (delta & 7) != 0 && to == A::ep(state)) {
      const int victim = us == Color::kWhite ? to - 8 : to + 8;
      const Bitboard vb = Bitboard{1} << victim;
      A::kind(s, PieceKind::kPawn) &= ~vb;
      A::color(s, them) &= ~vb;
    }
  } else if (mover == PieceKind::kKing && (to - from == 2 || from - to == 2)) {
    const int rook_from = to > from ? from + 3 : from - 4;
    const int rook_to = to > from ? from + 1 : from - 1;
    const Bitboard rb = (Bitboard{1} << rook_from) | (Bitboard{1} << rook_to);
    A::kind(s, PieceKind::kRook) ^= rb;
    A::color(s, us) ^= rb;
  }

  A::castling(s) &= kCastleMasks[from] & kCastleMasks[to];
  A::set_ep(s, new_ep);
  if (mover == PieceKind::kPawn || captured) {
    A::halfmove(s) = 0;
  } else {
    ++A::halfmove(s);
  }
  if (us == Color::kBlack) ++A::fullmove(s);
  A::side(s) = them;
  return s;
}

void generate_legal_moves(const ChessState& state, MoveList& out) {
  MoveList pseudo;
  generate_pseudo_legal(state, pseudo);
  out.clear();
  const Color us = state.side_to_move();
  for (const auto& m : pseudo) {
    if (leaves_king_safe(make_move(state, m), us)) out.push_back(m);
  }
}

std::vector<UciMove> legal_moves(const ChessState& state) {
  MoveList list;
  generate_legal_moves(state, list);
  return {list.begin(), list.end()};
}

bool is_legal_move(const ChessState& state, const UciMove& move) {
  MoveList list;
  generate_legal_moves(state, list);
  return list.contains(move);
}

bool has_legal_move(const ChessState& state) {
  MoveList pseudo;
  generate_pseudo_legal(state, pseudo);
  const Color us = state.side_to_move();
  return std::any_of(pseudo.begin(), pseudo.end(),
                     [&](const UciMove& m) { return leaves_king_safe(make_move(state, m), us); });
}

bool is_checkmate(const ChessState& state) { return state.in_check() && !has_legal_move(state); }

bool is_stalemate(const ChessState& state) { return !state.in_check() && !has_legal_move(state); }

std::uint64_t perft(const ChessState& state, int depth, bool parallel) {
  if (depth <= 0) return 1;
  if (!parallel || depth < 3) return perft_serial(state, depth);
  MoveList moves;
  generate_legal_moves(state, moves);
  std::vector<std::future<std::uint64_t>> parts;
  parts.reserve(moves.size());
  for (const auto& m : moves) {
    parts.push_back(std::async(std::launch::async, [child = make_move(state, m), depth] {
      return perft_serial(child, depth - 1);
    }));
  }
  std::uint64_t n = 0;
  for (auto& p : parts) n += p.get();
  return n;
}

}  // namespace statebench::chess
