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

#include <algorithm>

namespace statebench::metrics {

namespace detail {

template <fsa::Automaton A>
class OverlapWalker {
 public:
  OverlapWalker(const A& automaton, std::uint64_t budget) : automaton_(automaton), budget_(budget) {}

  // `acceptor` is only meaningful while `acceptor_alive` holds.
  void walk(const fsa::StateOf<A>& source, const fsa::StateOf<A>& acceptor, bool acceptor_alive, int depth_left) {
    if (++nodes_ > budget_) throw BudgetExceeded("affordance enumeration exceeded node budget");
    if (depth_left == 0) {
      ++result_.denominator;
      if (acceptor_alive) ++result_.numerator;
      return;
    }
    const auto source_actions = automaton_.legal_actions(source);
    std::vector<fsa::ActionOf<A>> acceptor_actions;
    if (acceptor_alive) acceptor_actions = automaton_.legal_actions(acceptor);
    if (source_actions.empty()) {
      ++result_.denominator;
      if (acceptor_alive && acceptor_actions.empty()) ++result_.numerator;
      return;
    }
    for (const auto& action : source_actions) {
      const auto next_source = fsa::legal_successor(automaton_, source, action);
      const bool keep = acceptor_alive &&
                        std::find(acceptor_actions.begin(), acceptor_actions.end(), action) != acceptor_actions.end();
      if (keep) {
        walk(next_source, fsa::legal_successor(automaton_, acceptor, action), true, depth_left - 1);
      } else {
        walk(next_source, acceptor, false, depth_left - 1);
      }
    }
  }

  Rational result() const { return result_; }

 private:
  const A& automaton_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Rational result_;
};

}  // namespace detail

template <fsa::Automaton A>
Rational exact_affordance_overlap(const A& automaton, const fsa::StateOf<A>& source,
                                  const fsa::StateOf<A>& acceptor, int depth, std::uint64_t node_budget) {
  if (automaton.is_sink(source)) return {};
  detail::OverlapWalker<A> walker(automaton, node_budget);
  walker.walk(source, acceptor, !automaton.is_sink(acceptor), std::max(depth, 0));
  return walker.result();
}

}  // namespace statebench::metrics
