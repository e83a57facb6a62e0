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

#include <optional>
#include <vector>

#include "statebench/chess/movegen.hpp"
#include "statebench/chess/position.hpp"
#include "statebench/fsa.hpp"

namespace statebench::chess {

/// Chess as a total automaton over coordinate moves. An empty optional is
/// the sink. Checkmate and stalemate are ordinary states whose legal set is
/// empty.
class ChessAutomaton {
 public:
  using State = std::optional<ChessState>;
  using Action = UciMove;

  State initial_state() const { return ChessState::initial(); }

  std::vector<UciMove> legal_actions(const State& state) const {
    if (!state) return {};
    return legal_moves(*state);
  }

  State transition(const State& state, const UciMove& action) const {
    if (!state || !is_legal_move(*state, action)) return std::nullopt;
    return make_move(*state, action);
  }

  State apply_legal(const State& state, const UciMove& action) const { return make_move(*state, action); }

  bool is_sink(const State& state) const { return !state.has_value(); }
};

static_assert(fsa::Automaton<ChessAutomaton>);
static_assert(fsa::HasLegalSuccessor<ChessAutomaton>);

}  // namespace statebench::chess
