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

#include <vector>

#include "statebench/chess/position.hpp"
#include "statebench/rng.hpp"

namespace statebench::chess {

/// Plays up to `plies` uniformly random legal moves from `start`, stopping
/// early at checkmate or stalemate. Returns the moves played.
std::vector<UciMove> random_playout(const ChessState& start, int plies, Engine& rng);

/// State reached by a random playout of `plies` from the initial position.
ChessState random_reachable_state(int plies, Engine& rng);

/// Uniform scatter of the given pieces (plus both kings, always placed) over
/// the board, rejecting placements that break position invariants. No
/// castling rights, no en-passant target, random side to move.
///
/// This is one concrete "random board" distribution; it makes no claim to
/// match any other study's notion of a random board.
ChessState random_scatter_position(const std::vector<Piece>& extra_pieces, Engine& rng);

/// Applies `count` random placement perturbations to a copy of `state`: each
/// one either removes a non-king piece or moves a non-king piece to a random
/// empty square (pawns avoid the back ranks). The result may violate
/// position invariants, e.g. by exposing the side not to move to check.
ChessState perturb_pieces(const ChessState& state, int count, Engine& rng);

}  // namespace statebench::chess
