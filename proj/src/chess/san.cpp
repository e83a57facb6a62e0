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

#include "statebench/chess/san.hpp"

#include <optional>

#include "statebench/chess/movegen.hpp"

namespace statebench::chess {

namespace {

char kind_letter(PieceKind k) {
  switch (k) {
    case PieceKind::kKnight: return 'N';
    case PieceKind::kBishop: return 'B';
    case PieceKind::kRook: return 'R';
    case PieceKind::kQueen: return 'Q';
    case PieceKind::kKing: return 'K';
    case PieceKind::kPawn: break;
  }
  return 'P';
}

std::optional<PieceKind> kind_from_letter(char c) {
  switch (c) {
    case 'N': return PieceKind::kKnight;
    case 'B': return PieceKind::kBishop;
    case 'R': return PieceKind::kRook;
    case 'Q': return PieceKind::kQueen;
    case 'K': return PieceKind::kKing;
    default: return std::nullopt;
  }
}

bool is_castle(const UciMove& m, PieceKind mover) {
  return mover == PieceKind::kKing && (m.to.index() - m.from.index() == 2 || m.from.index() - m.to.index() == 2);
}

bool is_capture(const ChessState& s, const UciMove& m, PieceKind mover) {
  if (s.piece_at(m.to)) return true;
  return mover == PieceKind::kPawn && m.from.file() != m.to.file();
}

/// Parsed shape of a SAN token.
struct SanPattern {
  bool castle_king = false;
  bool castle_queen = false;
  PieceKind piece = PieceKind::kPawn;
  int from_file = -1;
  int from_rank = -1;
  std::optional<Square> to;
  std::optional<PieceKind> promotion;
};

std::optional<SanPattern> parse_pattern(std::string_view token) {
  while (!token.empty() && (token.back() == '+' || token.back() == '#' || token.back() == '!' || token.back() == '?')) {
    token.remove_suffix(1);
  }
  if (token.size() >= 4 && token.substr(token.size() - 4) == "e.p.") token.remove_suffix(4);
  SanPattern p;
  if (token == "O-O" || token == "0-0") {
    p.castle_king = true;
    return p;
  }
  if (token == "O-O-O" || token == "0-0-0") {
    p.castle_queen = true;
    return p;
  }
  if (token.empty()) return std::nullopt;

  std::size_t i = 0;
  if (auto k = kind_from_letter(token[0])) {
    p.piece = *k;
    i = 1;
  }
  // Promotion suffix: "=Q", "=q", "Q", or lowercase "q"/"r"/"n" ("b" reads as a file).
  std::string_view body = token.substr(i);
  if (p.piece == PieceKind::kPawn && body.size() >= 3) {
    const char last = body.back();
    const bool has_eq = body[body.size() - 2] == '=';
    std::optional<PieceKind> promo;
    if (has_eq) {
      promo = kind_from_letter(static_cast<char>(last >= 'a' && last <= 'z' ? last - 'a' + 'A' : last));
    } else if (last == 'q' || last == 'r' || last == 'n') {
      promo = kind_from_letter(static_cast<char>(last - 'a' + 'A'));
    } else if (last >= 'A' && last <= 'Z') {
      promo = kind_from_letter(last);
    }
    if (promo && *promo != PieceKind::kKing) {
      p.promotion = promo;
      body.remove_suffix(has_eq ? 2 : 1);
    }
  }
  if (body.size() < 2) return std::nullopt;
  p.to = Square::parse(body.substr(body.size() - 2));
  if (!p.to) return std::nullopt;
  body.remove_suffix(2);
  if (!body.empty() && (body.back() == 'x' || body.back() == ':')) body.remove_suffix(1);
  for (char c : body) {
    if (c >= 'a' && c <= 'h') {
      if (p.from_file >= 0) return std::nullopt;
      p.from_file = c - 'a';
    } else if (c >= '1' && c <= '8') {
      if (p.from_rank >= 0) return std::nullopt;
      p.from_rank = c - '1';
    } else if (c == '-') {
      // long algebraic "e2-e4"
    } else {
      return std::nullopt;
    }
  }
  return p;
}

}  // namespace

std::string to_san(const ChessState& state, const UciMove& move) {
  const auto piece = state.piece_at(move.from);
  const PieceKind mover = piece ? piece->kind : PieceKind::kPawn;
  std::string san;
  if (is_castle(move, mover)) {
    san = move.to.file() > move.from.file() ? "O-O" : "O-O-O";
  } else {
    const bool capture = is_capture(state, move, mover);
    if (mover == PieceKind::kPawn) {
      if (capture) {
        san += static_cast<char>('a' + move.from.file());
        san += 'x';
      }
      san += move.to.name();
      if (move.promotion) {
        san += '=';
        san += kind_letter(*move.promotion);
      }
    } else {
      san += kind_letter(mover);
      bool ambiguous = false;
      bool same_file = false;
      bool same_rank = false;
      MoveList moves;
      generate_legal_moves(state, moves);
      for (const auto& other : moves) {
        if (other.to != move.to || other.from == move.from) continue;
        const auto op = state.piece_at(other.from);
        if (!op || op->kind != mover) continue;
        ambiguous = true;
        if (other.from.file() == move.from.file()) same_file = true;
        if (other.from.rank() == move.from.rank()) same_rank = true;
      }
      if (ambiguous) {
        if (!same_file) {
          san += static_cast<char>('a' + move.from.file());
        } else if (!same_rank) {
          san += static_cast<char>('1' + move.from.rank());
        } else {
          san += move.from.name();
        }
      }
      if (capture) san += 'x';
      san += move.to.name();
    }
  }
  const ChessState after = make_move(state, move);
  if (after.in_check()) san += has_legal_move(after) ? '+' : '#';
  return san;
}

UciMove parse_san(const ChessState& state, std::string_view token) {
  const auto pattern = parse_pattern(token);
  if (!pattern) throw SanError("unparseable SAN token '" + std::string(token) + "'");

  MoveList moves;
  generate_legal_moves(state, moves);
  std::optional<UciMove> found;
  int matches = 0;
  for (const auto& m : moves) {
    const auto piece = state.piece_at(m.from);
    if (!piece) continue;
    const bool castle = is_castle(m, piece->kind);
    bool ok;
    if (pattern->castle_king || pattern->castle_queen) {
      ok = castle && ((m.to.file() > m.from.file()) == pattern->castle_king);
    } else {
      ok = piece->kind == pattern->piece && m.to == *pattern->to && m.promotion == pattern->promotion &&
           (pattern->from_file < 0 || m.from.file() == pattern->from_file) &&
           (pattern->from_rank < 0 || m.from.rank() == pattern->from_rank);
      // "Kg1" spelling of castling is not accepted; a king moving two files is castling only.
      if (ok && castle) ok = false;
    }
    if (ok) {
      found = m;
      ++matches;
    }
  }
  if (matches == 0) throw SanError("no legal move matches '" + std::string(token) + "'");
  if (matches > 1) throw SanError("ambiguous SAN '" + std::string(token) + "'");
  return *found;
}

std::string format_movetext(const ChessState& start, std::span<const UciMove> moves) {
  std::string out;
  ChessState s = start;
  bool first = true;
  for (const auto& m : moves) {
    if (!first) out += ' ';
    if (s.side_to_move() == Color::kWhite) {
      out += std::to_string(s.fullmove_number()) + ". ";
    } else if (first) {
      out += std::to_string(s.fullmove_number()) + "... ";
    }
    out += to_san(s, m);
    s = make_move(s, m);
    first = false;
  }
  return out;
}

}  // namespace statebench::chess
