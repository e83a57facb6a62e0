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

// Monte Carlo estimation of affordance precision and recall.
//
// All estimators answer the same question: for a trajectory of length m drawn
// from a *source* state, how likely is it to also be valid from an *acceptor*
// state? Precision uses (source = predicted, acceptor = true); recall swaps
// the roles.
//
//   - naive_estimate expands the frontier of action sequences level by level,
//     subsampling to `max_frontier` when it grows too large, then counts how
//     many surviving sequences the acceptor admits.
//   - intermediate_estimate carries (source, acceptor, weight) particles. An
//     expansion splits a particle's weight evenly over the source's legal
//     actions and drops children the acceptor rejects, so the per-level
//     survival ratios v_i multiply to the estimate.
//   - path_sample_estimate draws independent branch-uniform trajectories.
//
// A source branch that runs out of legal actions before depth m is accepted
// iff the acceptor, after the same actions, also has no legal actions.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "statebench/fsa.hpp"
#include "statebench/rng.hpp"

namespace statebench::estimators {

enum class EstimatorKind { kNaive, kIntermediate };

/// How an oversized intermediate frontier is cut back to `max_frontier`.
enum class Resampling {
  /// Systematic resampling proportional to weight; every kept particle gets
  /// weight total / N.
  kWeightProportional,
  /// N particles drawn uniformly without replacement, each weight scaled by
  /// |frontier| / N.
  kUniformRescale,
};

struct EstimatorConfig {
  int depth_m = 4;
  std::size_t max_frontier = 500;
  std::uint64_t seed = 0;
  EstimatorKind kind = EstimatorKind::kIntermediate;
  Resampling resampling = Resampling::kWeightProportional;

  /// Throws std::invalid_argument unless depth_m >= 1 and max_frontier >= 1.
  void validate() const;
};

enum class EstimateStatus { kOk, kInvalidSource, kInvalidAcceptor };

struct EstimateResult {
  double p_hat = 0.0;
  /// Per-level conditional acceptance estimates. For the intermediate
  /// estimator their product is p_hat.
  std::vector<double> level_values;
  double standard_error = 0.0;
  std::size_t samples_used = 0;
  std::size_t early_termination_count = 0;
  EstimateStatus status = EstimateStatus::kOk;
  /// The frontier never exceeded max_frontier, so no subsampling happened.
  bool exact = false;
  /// p_hat is 0 and standard_error is the rule-of-three bound 3 / N.
  bool zero_rule_of_three = false;
  /// Every source branch ended before depth_m.
  bool degenerate_frontier = false;

  bool operator==(const EstimateResult&) const = default;
};

/// sqrt(p (1 - p) / n).
double standard_error(double p_hat, std::size_t n);

/// Sample counts suggested by the homogeneous-tree analysis: ceil(1 / p^m)
/// for the naive estimator, ceil(c m^2 (1 - p)^2 p) for the intermediate one.
/// Never less than 1. Requires 0 < p < 1 and m >= 1.
std::uint64_t required_samples(EstimatorKind kind, double p, int m, double constant = 1.0);

/// `n` distinct indices from [0, population), ascending. Requires n <= population.
std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t n, Engine& rng);

struct Resampled {
  std::vector<std::size_t> indices;  // ascending, may repeat
  std::vector<double> weights;
};

/// Systematic resampling to `n` particles, each with weight sum / n.
Resampled systematic_resample(std::span<const double> weights, std::size_t n, Engine& rng);

/// Uniform draw of `n` particles without replacement, weights scaled by
/// weights.size() / n.
Resampled uniform_rescale_resample(std::span<const double> weights, std::size_t n, Engine& rng);

template <fsa::Automaton A>
fsa::TrajectoryOf<A> sample_trajectory(const A& automaton, const fsa::StateOf<A>& state, int depth, Engine& rng);

template <fsa::Automaton A>
EstimateResult naive_estimate(const A& automaton, const fsa::StateOf<A>& source, const fsa::StateOf<A>& acceptor,
                              const EstimatorConfig& config);

template <fsa::Automaton A>
EstimateResult intermediate_estimate(const A& automaton, const fsa::StateOf<A>& source,
                                     const fsa::StateOf<A>& acceptor, const EstimatorConfig& config);

/// Mean acceptance over `config.max_frontier` independent branch-uniform
/// trajectories.
template <fsa::Automaton A>
EstimateResult path_sample_estimate(const A& automaton, const fsa::StateOf<A>& source,
                                    const fsa::StateOf<A>& acceptor, const EstimatorConfig& config);

/// Dispatches on config.kind.
template <fsa::Automaton A>
EstimateResult estimate(const A& automaton, const fsa::StateOf<A>& source, const fsa::StateOf<A>& acceptor,
                        const EstimatorConfig& config);

struct PrecisionRecall {
  EstimateResult precision;
  EstimateResult recall;
};

/// precision: source = predicted, acceptor = truth; recall: the reverse. The
/// two sides draw from independent streams of config.seed.
template <fsa::Automaton A>
PrecisionRecall precision_recall(const A& automaton, const fsa::StateOf<A>& truth,
                                 const fsa::StateOf<A>& predicted, const EstimatorConfig& config);

}  // namespace statebench::estimators

#include "statebench/estimators_inl.hpp"
