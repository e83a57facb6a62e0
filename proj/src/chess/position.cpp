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

#include "statebench/chess/position.hpp"

#include <bit>

#include "attacks.hpp"

namespace statebench::chess {

namespace {

constexpr std::string_view kPieceLetters = "pnbrqk";

constexpr Bitboard kRank1 = 0xffULL;
constexpr Bitboard kRank8 = 0xffULL << 56;

}  // namespace

char piece_char(Piece piece) {
  const char c = kPieceLetters[static_cast<int>(piece.kind)];
  return piece.color == Color::kWhite ? static_cast<char>(c - 'a' + 'A') : c;
}

std::optional<Piece> piece_from_char(char c) {
  const bool white = c >= 'A' && c <= 'Z';
  const char lower = white ? static_cast<char>(c - 'A' + 'a') : c;
  const auto pos = kPieceLetters.find(lower);
  if (pos == std::string_view::npos) return std::nullopt;
  return Piece{static_cast<PieceKind>(pos), white ? Color::kWhite : Color::kBlack};
}

std::string Square::name() const {
  return {static_cast<char>('a' + file()), static_cast<char>('1' + rank())};
}

std::optional<Square> Square::parse(std::string_view text) {
  if (text.size() != 2) return std::nullopt;
  if (text[0] < 'a' || text[0] > 'h' || text[1] < '1' || text[1] > '8') return std::nullopt;
  return Square(text[0] - 'a', text[1] - '1');
}

std::string UciMove::to_string() const {
  std::string s = from.name() + to.name();
  if (promotion) s += kPieceLetters[static_cast<int>(*promotion)];
  return s;
}

std::optional<UciMove> UciMove::parse(std::string_view text) {
  if (text.size() != 4 && text.size() != 5) return std::nullopt;
  const auto from = Square::parse(text.substr(0, 2));
  const auto to = Square::parse(text.substr(2, 2));
  if (!from || !to || *from == *to) return std::nullopt;
  UciMove move{*from, *to, std::nullopt};
  if (text.size() == 5) {
    switch (text[4]) {
      case 'n': move.promotion = PieceKind::kKnight; break;
      case 'b': move.promotion = PieceKind::kBishop; break;
      case 'r': move.promotion = PieceKind::kRook; break;
      case 'q': move.promotion = PieceKind::kQueen; break;
      default: return std::nullopt;
    }
  }
  return move;
}

ChessState ChessState::initial() {
  ChessState s;
  const std::array<PieceKind, 8> back{PieceKind::kRook, PieceKind::kKnight, PieceKind::kBishop, PieceKind::kQueen,
                                      PieceKind::kKing, PieceKind::kBishop, PieceKind::kKnight, PieceKind::kRook};
  for (int f = 0; f < 8; ++f) {
    s.set_piece(Square(f, 0), Piece{back[f], Color::kWhite});
    s.set_piece(Square(f, 1), Piece{PieceKind::kPawn, Color::kWhite});
    s.set_piece(Square(f, 6), Piece{PieceKind::kPawn, Color::kBlack});
    s.set_piece(Square(f, 7), Piece{back[f], Color::kBlack});
  }
  s.castling_ = 0xf;
  return s;
}

std::optional<Piece> ChessState::piece_at(Square sq) const {
  const Bitboard b = sq.bit();
  Color color;
  if (by_color_[0] & b) {
    color = Color::kWhite;
  } else if (by_color_[1] & b) {
    color = Color::kBlack;
  } else {
    return std::nullopt;
  }
  for (int k = 0; k < 6; ++k) {
    if (by_kind_[k] & b) return Piece{static_cast<PieceKind>(k), color};
  }
  return std::nullopt;
}

void ChessState::set_piece(Square sq, std::optional<Piece> piece) {
  const Bitboard b = sq.bit();
  for (auto& bb : by_kind_) bb &= ~b;
  for (auto& bb : by_color_) bb &= ~b;
  if (piece) {
    by_kind_[static_cast<int>(piece->kind)] |= b;
    by_color_[static_cast<int>(piece->color)] |= b;
  }
}

CastlingRights ChessState::castling_rights() const {
  return {(castling_ & 1) != 0, (castling_ & 2) != 0, (castling_ & 4) != 0, (castling_ & 8) != 0};
}

void ChessState::set_castling_rights(const CastlingRights& r) {
  castling_ = static_cast<std::uint8_t>((r.white_king ? 1 : 0) | (r.white_queen ? 2 : 0) | (r.black_king ? 4 : 0) |
                                        (r.black_queen ? 8 : 0));
}

std::optional<Square> ChessState::en_passant_target() const {
  if (ep_ < 0) return std::nullopt;
  return Square(ep_);
}

void ChessState::set_en_passant_target(std::optional<Square> sq) { ep_ = sq ? static_cast<std::int8_t>(sq->index()) : -1; }

bool ChessState::is_attacked(Square sq, Color by) const {
  using namespace detail;
  const int s = sq.index();
  const Bitboard them = pieces(by);
  const Bitboard occ = occupied();
  if (kPawnAttacks[static_cast<int>(opposite(by))][s] & them & pieces(PieceKind::kPawn)) return true;
  if (kKnightAttacks[s] & them & pieces(PieceKind::kKnight)) return true;
  if (kKingAttacks[s] & them & pieces(PieceKind::kKing)) return true;
  const Bitboard queens = pieces(PieceKind::kQueen);
  if (bishop_attacks(s, occ) & them & (pieces(PieceKind::kBishop) | queens)) return true;
  if (rook_attacks(s, occ) & them & (pieces(PieceKind::kRook) | queens)) return true;
  return false;
}

bool ChessState::in_check() const {
  const Bitboard king = pieces(side_, PieceKind::kKing);
  if (!king) return false;
  return is_attacked(Square(std::countr_zero(king)), opposite(side_));
}

std::optional<std::string> ChessState::invariant_violation() const {
  for (Color c : {Color::kWhite, Color::kBlack}) {
    const int kings = std::popcount(pieces(c, PieceKind::kKing));
    if (kings != 1) {
      return std::string(c == Color::kWhite ? "white" : "black") + " has " + std::to_string(kings) + " kings";
    }
  }
  if (pieces(PieceKind::kPawn) & (kRank1 | kRank8)) return "pawn on first or last rank";
  if (ep_ >= 0) {
    const int want = side_ == Color::kWhite ? 5 : 2;
    if (Square(ep_).rank() != want) return "en-passant target on wrong rank";
  }
  const Color waiting = opposite(side_);
  const Bitboard king = pieces(waiting, PieceKind::kKing);
  if (is_attacked(Square(std::countr_zero(king)), side_)) return "side not to move is in check";
  return std::nullopt;
}

}  // namespace statebench::chess
