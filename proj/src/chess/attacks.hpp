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

// Attack tables shared by the position and move generator sources.

#pragma once

#include <array>
#include <bit>

#include "statebench/chess/position.hpp"

namespace statebench::chess::detail {

constexpr Bitboard step_attacks(int sq, const std::array<std::array<int, 2>, 8>& deltas, int count) {
  Bitboard bb = 0;
  const int f = sq & 7;
  const int r = sq >> 3;
  for (int i = 0; i < count; ++i) {
    const int nf = f + deltas[i][0];
    const int nr = r + deltas[i][1];
    if (nf >= 0 && nf < 8 && nr >= 0 && nr < 8) bb |= Bitboard{1} << (nr * 8 + nf);
  }
  return bb;
}

constexpr std::array<std::array<int, 2>, 8> kKnightDeltas{
    {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}}};
constexpr std::array<std::array<int, 2>, 8> kKingDeltas{
    {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
constexpr std::array<std::array<int, 2>, 8> kWhitePawnDeltas{{{-1, 1}, {1, 1}}};
constexpr std::array<std::array<int, 2>, 8> kBlackPawnDeltas{{{-1, -1}, {1, -1}}};

constexpr std::array<Bitboard, 64> make_table(const std::array<std::array<int, 2>, 8>& deltas, int count) {
  std::array<Bitboard, 64> t{};
  for (int sq = 0; sq < 64; ++sq) t[sq] = step_attacks(sq, deltas, count);
  return t;
}

inline constexpr auto kKnightAttacks = make_table(kKnightDeltas, 8);
inline constexpr auto kKingAttacks = make_table(kKingDeltas, 8);
// Indexed by the color of the attacking pawn.
inline constexpr std::array<std::array<Bitboard, 64>, 2> kPawnAttacks{make_table(kWhitePawnDeltas, 2),
                                                                      make_table(kBlackPawnDeltas, 2)};

constexpr std::array<std::array<int, 2>, 4> kRookDirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
constexpr std::array<std::array<int, 2>, 4> kBishopDirs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

inline Bitboard ray_attacks(int sq, Bitboard occupied, const std::array<std::array<int, 2>, 4>& dirs) {
  Bitboard bb = 0;
  const int f0 = sq & 7;
  const int r0 = sq >> 3;
  for (const auto& d : dirs) {
    int f = f0 + d[0];
    int r = r0 + d[1];
    while (f >= 0 && f < 8 && r >= 0 && r < 8) {
      const Bitboard b = Bitboard{1} << (r * 8 + f);
      bb |= b;
      if (occupied & b) break;
      f += d[0];
      r += d[1];
    }
  }
  return bb;
}

inline Bitboard rook_attacks(int sq, Bitboard occupied) { return ray_attacks(sq, occupied, kRookDirs); }
inline Bitboard bishop_attacks(int sq, Bitboard occupied) { return ray_attacks(sq, occupied, kBishopDirs); }

inline int pop_lsb(Bitboard& bb) {
  const int sq = std::countr_zero(bb);
  bb &= bb - 1;
  return sq;
}

}  // namespace statebench::chess::detail
