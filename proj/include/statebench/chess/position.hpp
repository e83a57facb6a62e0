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
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace statebench::chess {

using Bitboard = std::uint64_t;

enum class Color : std::uint8_t { kWhite = 0, kBlack = 1 };

constexpr Color opposite(Color c) { return c == Color::kWhite ? Color::kBlack : Color::kWhite; }

enum class PieceKind : std::uint8_t { kPawn = 0, kKnight, kBishop, kRook, kQueen, kKing };

struct Piece {
  PieceKind kind;
  Color color;

  bool operator==(const Piece&) const = default;
};

/// FEN letter: uppercase for white.
char piece_char(Piece piece);
std::optional<Piece> piece_from_char(char c);

/// Board square, a1 = 0 ... h8 = 63.
class Square {
 public:
  constexpr Square() = default;
  constexpr explicit Square(int index) : index_(static_cast<std::uint8_t>(index)) {}
  constexpr Square(int file, int rank) : index_(static_cast<std::uint8_t>(rank * 8 + file)) {}

  constexpr int index() const { return index_; }
  constexpr int file() const { return index_ & 7; }
  constexpr int rank() const { return index_ >> 3; }
  constexpr Bitboard bit() const { return Bitboard{1} << index_; }

  std::string name() const;
  static std::optional<Square> parse(std::string_view text);

  auto operator<=>(const Square&) const = default;

 private:
  std::uint8_t index_ = 0;
};

/// Coordinate move, the action alphabet shared by every chess state.
struct UciMove {
  Square from;
  Square to;
  std::optional<PieceKind> promotion;

  std::string to_string() const;
  /// Accepts 4 or 5 characters, e.g. "e2e4" or "e7e8q". Case-sensitive lowercase.
  static std::optional<UciMove> parse(std::string_view text);

  bool operator==(const UciMove&) const = default;
  auto operator<=>(const UciMove&) const = default;
};

struct CastlingRights {
  bool white_king = false;
  bool white_queen = false;
  bool black_king = false;
  bool black_queen = false;

  bool operator==(const CastlingRights&) const = default;
};

/// A complete chess game state: placement, side to move, castling rights,
/// en-passant target and move counters.
///
/// The type can hold arbitrary boards so that malformed predictions can
/// still be inspected square by square; `invariant_violation()` reports
/// whether the value is a legal position. Every move-generation entry point
/// requires a legal position.
class ChessState {
 public:
  /// Empty board, white to move, no rights, counters 0 and 1.
  ChessState() = default;

  static ChessState initial();

  std::optional<Piece> piece_at(Square sq) const;
  void set_piece(Square sq, std::optional<Piece> piece);

  Color side_to_move() const { return side_; }
  void set_side_to_move(Color c) { side_ = c; }

  CastlingRights castling_rights() const;
  void set_castling_rights(const CastlingRights& rights);

  std::optional<Square> en_passant_target() const;
  void set_en_passant_target(std::optional<Square> sq);

  int halfmove_clock() const { return halfmove_; }
  void set_halfmove_clock(int n) { halfmove_ = n; }
  int fullmove_number() const { return fullmove_; }
  void set_fullmove_number(int n) { fullmove_ = n; }

  Bitboard pieces(PieceKind kind) const { return by_kind_[static_cast<int>(kind)]; }
  Bitboard pieces(Color c) const { return by_color_[static_cast<int>(c)]; }
  Bitboard pieces(Color c, PieceKind kind) const { return pieces(c) & pieces(kind); }
  Bitboard occupied() const { return by_color_[0] | by_color_[1]; }

  /// True when a piece of color `by` attacks `sq`.
  bool is_attacked(Square sq, Color by) const;
  /// True when the side to move has its king attacked.
  bool in_check() const;

  /// Description of the first violated legality invariant, or nothing for a
  /// legal position. Checked: one king per color, no pawns on the back ranks,
  /// en-passant target on the rank matching the side to move, and the side
  /// not to move is not in check.
  std::optional<std::string> invariant_violation() const;
  bool is_legal_position() const { return !invariant_violation().has_value(); }

  bool operator==(const ChessState&) const = default;

 private:
  friend class MoveGenAccess;

  std::array<Bitboard, 6> by_kind_{};
  std::array<Bitboard, 2> by_color_{};
  Color side_ = Color::kWhite;
  std::uint8_t castling_ = 0;  // bit 0: K, 1: Q, 2: k, 3: q
  std::int8_t ep_ = -1;
  int halfmove_ = 0;
  int fullmove_ = 1;
};

}  // namespace statebench::chess
