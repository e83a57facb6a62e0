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

#include "statebench/report/studies.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/core.h>

#include "statebench/chess/automaton.hpp"
#include "statebench/chess/fen.hpp"
#include "statebench/chess/movegen.hpp"
#include "statebench/chess/sampling.hpp"
#include "statebench/metrics.hpp"
#include "statebench/rng.hpp"
#include "statebench/synthetic_tree.hpp"

namespace statebench::report {

namespace {

const char* kind_name(estimators::EstimatorKind k) {
  return k == estimators::EstimatorKind::kNaive ? "naive" : "intermediate";
}

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

double sample_std(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  const double mu = mean_of(values);
  double ss = 0.0;
  for (double x : values) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double VariancePoint::mean() const { return mean_of(estimates); }
double VariancePoint::std() const { return sample_std(estimates); }

std::vector<TreeStudyRow> homogeneous_tree_study(const TreeStudyConfig& config) {
  std::vector<TreeStudyRow> rows;
  using Mode = HomogeneousTree::Acceptance;
  for (Mode mode : {Mode::kExactFraction, Mode::kBernoulli}) {
    for (auto kind : {estimators::EstimatorKind::kNaive, estimators::EstimatorKind::kIntermediate}) {
      for (int m = 1; m <= config.max_depth; ++m) {
        std::vector<double> estimates;
        for (int r = 0; r < config.runs; ++r) {
          const auto run = static_cast<std::uint64_t>(r);
          const HomogeneousTree tree(config.branching, config.acceptance, derive_seed(config.seed, 2 * run), mode);
          estimators::EstimatorConfig ec;
          ec.kind = kind;
          ec.depth_m = m;
          ec.max_frontier = config.max_frontier;
          ec.seed = derive_seed(config.seed, 2 * run + 1);
          estimates.push_back(estimators::estimate(tree, tree.initial_state(), tree.restricted_root(), ec).p_hat);
        }
        TreeStudyRow row;
        row.tree_mode = mode == Mode::kExactFraction ? "exact_fraction" : "bernoulli";
        row.estimator = kind_name(kind);
        row.m = m;
        row.target = std::pow(config.acceptance, m);
        row.mean = mean_of(estimates);
        row.std = sample_std(estimates);
        row.se = row.std / std::sqrt(static_cast<double>(config.runs));
        rows.push_back(row);
      }
    }
  }
  return rows;
}

StatePair find_divergent_pair(std::uint64_t seed, std::size_t min_distance, double min_overlap) {
  chess::ChessAutomaton automaton;
  Engine rng = make_engine(seed, 5);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    StatePair pair;
    pair.truth = chess::random_reachable_state(16 + static_cast<int>(rng() % 16), rng);
    pair.predicted = pair.truth;
    for (const auto& mv : chess::random_playout(pair.truth, 4, rng)) {
      pair.predicted = chess::make_move(pair.predicted, mv);
    }
    pair.edit_distance =
        metrics::edit_distance(chess::format_fen_core(pair.truth), chess::format_fen_core(pair.predicted));
    pair.overlap_1 = metrics::exact_affordance_overlap(automaton, chess::ChessAutomaton::State(pair.predicted),
                                                       chess::ChessAutomaton::State(pair.truth), 1)
                         .value();
    if (pair.edit_distance >= min_distance && pair.overlap_1 >= min_overlap) return pair;
  }
  throw std::runtime_error("no state pair met the distance and overlap bounds");
}

std::vector<VariancePoint> variance_study(const StatePair& pair, const VarianceStudyConfig& config) {
  chess::ChessAutomaton automaton;
  const chess::ChessAutomaton::State truth = pair.truth;
  const chess::ChessAutomaton::State predicted = pair.predicted;
  std::vector<VariancePoint> points;
  auto run = [&](const char* sweep, estimators::EstimatorKind kind, int m, std::size_t n) {
    VariancePoint p{sweep, kind, m, n, {}};
    for (int r = 0; r < config.runs; ++r) {
      estimators::EstimatorConfig ec;
      ec.kind = kind;
      ec.depth_m = m;
      ec.max_frontier = n;
      ec.seed = derive_seed(config.seed, static_cast<std::uint64_t>(r));
      p.estimates.push_back(estimators::estimate(automaton, predicted, truth, ec).p_hat);
    }
    points.push_back(std::move(p));
  };
  for (auto kind : {estimators::EstimatorKind::kNaive, estimators::EstimatorKind::kIntermediate}) {
    for (int m : config.depths) run("depth", kind, m, config.depth_sweep_n);
    for (std::size_t n : config.n_sweep) run("samples", kind, config.n_sweep_depth, n);
  }
  return points;
}

std::string tree_study_to_csv(const std::vector<TreeStudyRow>& rows) {
  std::string out = "tree_mode,estimator,m,target,mean,std,se\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", r.tree_mode, r.estimator, r.m, r.target, r.mean, r.std, r.se);
  }
  return out;
}

std::string variance_study_to_csv(const std::vector<VariancePoint>& points) {
  std::string out = "sweep,estimator,m,n,runs,mean,std\n";
  for (const auto& p : points) {
    out += fmt::format("{},{},{},{},{},{},{}\n", p.sweep, kind_name(p.kind), p.m, p.n, p.estimates.size(), p.mean(),
                       p.std());
  }
  return out;
}

}  // namespace statebench::report
