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

// Estimator studies behind the `validate` subcommand.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "statebench/chess/position.hpp"
#include "statebench/estimators.hpp"

namespace statebench::report {

struct TreeStudyConfig {
  int branching = 8;
  double acceptance = 0.75;
  int max_depth = 8;
  int runs = 50;
  std::size_t max_frontier = 500;
  std::uint64_t seed = 0;
};

struct TreeStudyRow {
  std::string tree_mode;  // "exact_fraction" or "bernoulli"
  std::string estimator;  // "naive" or "intermediate"
  int m = 0;
  double target = 0.0;  // acceptance^m
  double mean = 0.0;
  double std = 0.0;
  double se = 0.0;  // std / sqrt(runs)

  bool operator==(const TreeStudyRow&) const = default;
};

/// Mean estimate against acceptance^m on homogeneous trees, for both tree
/// modes, both estimators and m = 1..max_depth. Run r uses a fresh tree
/// and estimator seed derived from (seed, r).
std::vector<TreeStudyRow> homogeneous_tree_study(const TreeStudyConfig& config);

struct StatePair {
  chess::ChessState truth;
  chess::ChessState predicted;
  std::size_t edit_distance = 0;
  double overlap_1 = 0.0;  // exact precision at depth 1
};

/// First pair from a seeded stream of (game position, same game a few plies
/// later) whose FENs differ by at least `min_distance` edits while sharing
/// at least `min_overlap` of the first moves. Throws std::runtime_error if
/// none turns up.
StatePair find_divergent_pair(std::uint64_t seed, std::size_t min_distance = 15, double min_overlap = 0.7);

struct VarianceStudyConfig {
  std::vector<int> depths{4, 5, 6, 7, 8};
  std::size_t depth_sweep_n = 500;
  int n_sweep_depth = 4;
  std::vector<std::size_t> n_sweep{50, 100, 500};
  int runs = 50;
  std::uint64_t seed = 0;
};

struct VariancePoint {
  std::string sweep;  // "depth" or "samples"
  estimators::EstimatorKind kind = estimators::EstimatorKind::kIntermediate;
  int m = 0;
  std::size_t n = 0;
  std::vector<double> estimates;  // precision, one per run

  double mean() const;
  double std() const;
};

/// Repeated precision estimates for the pair: every depth at depth_sweep_n,
/// then every n of n_sweep at n_sweep_depth, for both estimators.
std::vector<VariancePoint> variance_study(const StatePair& pair, const VarianceStudyConfig& config);

std::string tree_study_to_csv(const std::vector<TreeStudyRow>& rows);
std::string variance_study_to_csv(const std::vector<VariancePoint>& points);

double sample_std(const std::vector<double>& values);

}  // namespace statebench::report
