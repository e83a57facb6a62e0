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

#include "statebench/chess/fen.hpp"

#include <charconv>
#include <vector>

namespace statebench::chess {

namespace {

[[noreturn]] void malformed(const std::string& why) { throw FenError(FenError::Kind::kMalformed, "malformed FEN: " + why); }

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < text.size() && !(text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

int parse_counter(std::string_view field, const char* name) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || value < 0) {
    malformed(std::string("bad ") + name + " '" + std::string(field) + "'");
  }
  return value;
}

void parse_placement(std::string_view field, ChessState& s) {
  int rank = 7;
  int file = 0;
  for (char c : field) {
    if (c == '/') {
      if (file != 8) malformed("rank " + std::to_string(rank + 1) + " does not have 8 squares");
      if (rank == 0) malformed("more than 8 ranks");
      --rank;
      file = 0;
    } else if (c >= '1' && c <= '8') {
      file += c - '0';
      if (file > 8) malformed("rank " + std::to_string(rank + 1) + " overflows");
    } else if (const auto piece = piece_from_char(c)) {
      if (file >= 8) malformed("rank " + std::to_string(rank + 1) + " overflows");
      s.set_piece(Square(file, rank), *piece);
      ++file;
    } else {
      malformed(std::string("unexpected character '") + c + "' in placement");
    }
  }
  if (rank != 0 || file != 8) malformed("placement does not describe 8 full ranks");
}

}  // namespace

ChessState parse_fen_unchecked(std::string_view text) {
  const auto fields = split_ws(text);
  if (fields.size() < 4 || fields.size() > 6) {
    malformed("expected 4 to 6 fields, got " + std::to_string(fields.size()));
  }
  ChessState s;
  parse_placement(fields[0], s);

  if (fields[1] == "w") {
    s.set_side_to_move(Color::kWhite);
  } else if (fields[1] == "b") {
    s.set_side_to_move(Color::kBlack);
  } else {
    malformed("side to move must be 'w' or 'b'");
  }

  CastlingRights rights;
  if (fields[2] != "-") {
    for (char c : fields[2]) {
      bool* flag = nullptr;
      switch (c) {
        case 'K': flag = &rights.white_king; break;
        case 'Q': flag = &rights.white_queen; break;
        case 'k': flag = &rights.black_king; break;
        case 'q': flag = &rights.black_queen; break;
        default: malformed(std::string("bad castling character '") + c + "'");
      }
      if (*flag) malformed("duplicate castling right");
      *flag = true;
    }
  }
  s.set_castling_rights(rights);

  if (fields[3] != "-") {
    const auto sq = Square::parse(fields[3]);
    if (!sq) malformed("bad en-passant square '" + std::string(fields[3]) + "'");
    s.set_en_passant_target(sq);
  }

  if (fields.size() >= 5) s.set_halfmove_clock(parse_counter(fields[4], "halfmove clock"));
  if (fields.size() == 6) {
    const int fullmove = parse_counter(fields[5], "fullmove number");
    if (fullmove < 1) malformed("fullmove number must be positive");
    s.set_fullmove_number(fullmove);
  }
  return s;
}

ChessState parse_fen(std::string_view text) {
  ChessState s = parse_fen_unchecked(text);
  if (auto why = s.invariant_violation()) {
    throw FenError(FenError::Kind::kIllegalPosition, "illegal position: " + *why);
  }
  return s;
}

std::string format_placement(const ChessState& state) {
  std::string out;
  for (int rank = 7; rank >= 0; --rank) {
    int gap = 0;
    for (int file = 0; file < 8; ++file) {
      const auto piece = state.piece_at(Square(file, rank));
      if (!piece) {
        ++gap;
        continue;
      }
      if (gap) out += static_cast<char>('0' + gap);
      gap = 0;
      out += piece_char(*piece);
    }
    if (gap) out += static_cast<char>('0' + gap);
    if (rank) out += '/';
  }
  return out;
}

std::string format_fen_core(const ChessState& state) {
  std::string out = format_placement(state);
  out += state.side_to_move() == Color::kWhite ? " w " : " b ";
  const auto r = state.castling_rights();
  std::string castling;
  if (r.white_king) castling += 'K';
  if (r.white_queen) castling += 'Q';
  if (r.black_king) castling += 'k';
  if (r.black_queen) castling += 'q';
  out += castling.empty() ? "-" : castling;
  out += ' ';
  const auto ep = state.en_passant_target();
  out += ep ? ep->name() : "-";
  return out;
}

std::string format_fen(const ChessState& state) {
  return format_fen_core(state) + ' ' + std::to_string(state.halfmove_clock()) + ' ' +
         std::to_string(state.fullmove_number());
}

}  // namespace statebench::chess
