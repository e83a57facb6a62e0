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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "statebench/chess/position.hpp"
#include "statebench/fsa.hpp"

namespace statebench::metrics {

/// Which part of the FEN text exact match and edit distance look at.
enum class ComparisonFields {
  kFirstFour,  // placement, side to move, castling, en passant
  kFullFen,
};

struct MetricConfig {
  double kernel_lambda = 0.1;
  ComparisonFields fields = ComparisonFields::kFirstFour;

  /// Throws std::invalid_argument unless kernel_lambda > 0.
  void validate() const;
};

/// All per-record scores. Affordance fields are empty when not computed.
struct MetricBundle {
  bool exact_match = false;
  std::size_t edit_distance = 0;
  double edit_kernel = 0.0;
  double board_accuracy = 0.0;
  std::optional<double> precision_m;
  std::optional<double> recall_m;
  int depth_m = 0;

  bool operator==(const MetricBundle&) const = default;
};

std::string comparison_text(const chess::ChessState& state, ComparisonFields fields);

bool exact_match(const chess::ChessState& truth, const chess::ChessState& predicted,
                 ComparisonFields fields = ComparisonFields::kFirstFour);

/// Levenshtein distance with unit insert, delete and substitute costs.
std::size_t edit_distance(std::string_view a, std::string_view b);

/// exp(-lambda * distance). Throws std::invalid_argument for lambda <= 0.
double edit_kernel(std::size_t distance, double lambda);

/// Fraction of the 64 squares whose contents agree.
double board_accuracy(const chess::ChessState& truth, const chess::ChessState& predicted);

struct Rational {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;

  /// numerator / denominator, or 0 for an empty denominator.
  double value() const {
    return denominator == 0 ? 0.0 : static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  bool operator==(const Rational&) const = default;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 5'000'000;

/// Exact share of the length-`depth` action sequences valid from `source`
/// that are also valid from `acceptor`. Called with (predicted, true) this is
/// precision; with (true, predicted) it is recall.
///
/// A source branch that reaches a state with no legal actions before `depth`
/// is a single shorter sequence; it counts as accepted only if the acceptor,
/// after the same actions, also has no legal actions.
///
/// Throws BudgetExceeded once more than `node_budget` tree nodes have been
/// visited. A sink source yields 0/0.
template <fsa::Automaton A>
Rational exact_affordance_overlap(const A& automaton, const fsa::StateOf<A>& source,
                                  const fsa::StateOf<A>& acceptor, int depth,
                                  std::uint64_t node_budget = kDefaultEnumerationBudget);

}  // namespace statebench::metrics

#include "statebench/metrics_inl.hpp"
