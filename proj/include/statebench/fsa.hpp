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

#include <concepts>
#include <span>
#include <vector>

namespace statebench::fsa {

/// A deterministic automaton over an augmented state space with a single
/// absorbing sink. The transition function is total: an action outside the
/// legal set of a state, or any action applied to the sink, yields the sink.
///
/// Requirements on a model `A`:
///   - `A::State` is a regular value type; `A::Action` is equality comparable.
///   - `legal_actions(sink)` is empty.
///   - for a non-sink `s`, `transition(s, a)` is non-sink iff `a` is in
///     `legal_actions(s)`.
///
/// A legal non-sink state may still have an empty legal set (a finished
/// game). That is a terminal state, not the sink.
template <class A>
concept Automaton =
    std::regular<typename A::State> && std::equality_comparable<typename A::Action> &&
    requires(const A& automaton, const typename A::State& state, const typename A::Action& action) {
      { automaton.initial_state() } -> std::convertible_to<typename A::State>;
      { automaton.legal_actions(state) } -> std::convertible_to<std::vector<typename A::Action>>;
      { automaton.transition(state, action) } -> std::convertible_to<typename A::State>;
      { automaton.is_sink(state) } -> std::convertible_to<bool>;
    };

/// Optional capability: successor of a non-sink state under an action already
/// known to be legal, skipping the legality check `transition` performs.
template <class A>
concept HasLegalSuccessor =
    Automaton<A> &&
    requires(const A& automaton, const typename A::State& state, const typename A::Action& action) {
      { automaton.apply_legal(state, action) } -> std::convertible_to<typename A::State>;
    };

template <Automaton A>
using StateOf = typename A::State;

template <Automaton A>
using ActionOf = typename A::Action;

/// Successor of `state` under an action drawn from its own legal set.
template <Automaton A>
StateOf<A> legal_successor(const A& automaton, const StateOf<A>& state, const ActionOf<A>& action) {
  if constexpr (HasLegalSuccessor<A>) {
    return automaton.apply_legal(state, action);
  } else {
    return automaton.transition(state, action);
  }
}

template <Automaton A>
StateOf<A> apply(const A& automaton, const StateOf<A>& state, const ActionOf<A>& action) {
  return automaton.transition(state, action);
}

/// Left fold of `apply`. Stops early once the sink is reached since the sink
/// absorbs every remaining action.
template <Automaton A>
StateOf<A> apply_sequence(const A& automaton, StateOf<A> state, std::span<const ActionOf<A>> actions) {
  for (const auto& action : actions) {
    if (automaton.is_sink(state)) break;
    state = automaton.transition(state, action);
  }
  return state;
}

template <Automaton A>
bool is_valid_sequence(const A& automaton, const StateOf<A>& state, std::span<const ActionOf<A>> actions) {
  if (automaton.is_sink(state)) return false;
  return !automaton.is_sink(apply_sequence(automaton, state, actions));
}

/// A walk from some origin state. `terminated_early` is set when the walk
/// hit a state with an empty legal set before reaching its target depth.
template <class State, class Action>
struct TrajectoryState {
  State current;
  std::vector<Action> actions_taken;
  bool terminated_early = false;

  bool operator==(const TrajectoryState&) const = default;
};

template <Automaton A>
using TrajectoryOf = TrajectoryState<StateOf<A>, ActionOf<A>>;

}  // namespace statebench::fsa
