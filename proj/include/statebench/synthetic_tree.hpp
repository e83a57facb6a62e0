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
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "statebench/fsa.hpp"
#include "statebench/rng.hpp"

namespace statebench {

/// Infinite tree with constant branching, seen from two vantage points.
///
/// The unrestricted state admits every action at every node. The restricted
/// state admits only a subset at each node, so a branch-uniform trajectory
/// from the unrestricted root is accepted by the restricted root with
/// probability p^m at depth m:
///   - kExactFraction: exactly round(p * branching) actions per node, chosen
///     pseudo-randomly per node;
///   - kBernoulli: each action independently with probability p, so only the
///     expectation over trees is p^m.
class HomogeneousTree {
 public:
  enum class Acceptance { kExactFraction, kBernoulli };

  struct State {
    std::uint64_t node = 0;
    bool restricted = false;
    bool sink = false;

    bool operator==(const State&) const = default;
  };
  using Action = int;

  HomogeneousTree(int branching, double acceptance, std::uint64_t tree_seed,
                  Acceptance mode = Acceptance::kExactFraction)
      : branching_(branching), acceptance_(acceptance), tree_seed_(tree_seed), mode_(mode) {
    if (branching < 1) throw std::invalid_argument("branching must be positive");
    if (!(acceptance >= 0.0 && acceptance <= 1.0)) throw std::invalid_argument("acceptance must lie in [0, 1]");
    accepted_per_node_ = static_cast<int>(std::lround(acceptance * branching));
    if (mode == Acceptance::kExactFraction &&
        std::abs(accepted_per_node_ - acceptance * branching) > 1e-9) {
      throw std::invalid_argument("exact-fraction mode needs acceptance * branching to be an integer");
    }
  }

  State initial_state() const { return {kRoot, false, false}; }
  State restricted_root() const { return {kRoot, true, false}; }

  std::vector<Action> legal_actions(const State& s) const {
    if (s.sink) return {};
    std::vector<Action> all(static_cast<std::size_t>(branching_));
    std::iota(all.begin(), all.end(), 0);
    if (!s.restricted) return all;
    const std::uint64_t node_seed = derive_seed(tree_seed_, s.node);
    if (mode_ == Acceptance::kExactFraction) {
      Engine rng(node_seed);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(static_cast<std::size_t>(accepted_per_node_));
      std::sort(all.begin(), all.end());
      return all;
    }
    std::vector<Action> kept;
    for (Action a : all) {
      const double u = static_cast<double>(mix64(node_seed ^ static_cast<std::uint64_t>(a)) >> 11) * 0x1.0p-53;
      if (u < acceptance_) kept.push_back(a);
    }
    return kept;
  }

  State transition(const State& s, Action a) const {
    if (s.sink) return s;
    const auto legal = legal_actions(s);
    if (std::find(legal.begin(), legal.end(), a) == legal.end()) return {0, s.restricted, true};
    return apply_legal(s, a);
  }

  State apply_legal(const State& s, Action a) const {
    return {derive_seed(s.node, static_cast<std::uint64_t>(a) + 1), s.restricted, false};
  }

  bool is_sink(const State& s) const { return s.sink; }

  int branching() const { return branching_; }
  double acceptance() const { return acceptance_; }

 private:
  static constexpr std::uint64_t kRoot = 0x5eed;

  int branching_;
  double acceptance_;
  std::uint64_t tree_seed_;
  Acceptance mode_;
  int accepted_per_node_ = 0;
};

static_assert(fsa::Automaton<HomogeneousTree>);

}  // namespace statebench
