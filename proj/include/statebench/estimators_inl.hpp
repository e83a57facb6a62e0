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
#include <numeric>

namespace statebench::estimators {

namespace detail {

template <class Action>
bool contains(const std::vector<Action>& actions, const Action& a) {
  return std::find(actions.begin(), actions.end(), a) != actions.end();
}

inline constexpr std::uint64_t kPrecisionStream = 1;
inline constexpr std::uint64_t kRecallStream = 2;

/// Fills in the status for sink inputs. Returns true when estimation can go on.
template <fsa::Automaton A>
bool check_inputs(const A& automaton, const fsa::StateOf<A>& source, const fsa::StateOf<A>& acceptor,
                  EstimateResult& out) {
  if (automaton.is_sink(source)) {
    out.status = EstimateStatus::kInvalidSource;
    return false;
  }
  if (automaton.is_sink(acceptor)) {
    out.status = EstimateStatus::kInvalidAcceptor;
    return false;
  }
  return true;
}

/// Number of leading actions of `actions` the acceptor admits, with one
/// extra level credited for a source branch that ended early when the
/// acceptor has ended too. A value of `depth` means accepted.
template <fsa::Automaton A>
int survival_depth(const A& automaton, fsa::StateOf<A> acceptor, const std::vector<fsa::ActionOf<A>>& actions,
                   bool terminal, int depth) {
  int survived = 0;
  for (const auto& a : actions) {
    const auto legal = automaton.legal_actions(acceptor);
    if (!contains(legal, a)) return survived;
    acceptor = fsa::legal_successor(automaton, acceptor, a);
    ++survived;
  }
  if (!terminal) return survived;
  return automaton.legal_actions(acceptor).empty() ? depth : survived;
}

/// Binomial-style summary shared by the sequence-counting estimators.
inline void finish_proportion(EstimateResult& r, std::size_t accepted, std::size_t total) {
  r.samples_used = total;
  if (total == 0) return;
  r.p_hat = static_cast<double>(accepted) / static_cast<double>(total);
  if (accepted == 0) {
    r.standard_error = 3.0 / static_cast<double>(total);
    r.zero_rule_of_three = true;
  } else {
    r.standard_error = standard_error(r.p_hat, total);
  }
}

/// Per-level survival ratios from survival depths.
inline std::vector<double> level_ratios(const std::vector<int>& survival, int depth) {
  std::vector<double> out;
  std::size_t previous = survival.size();
  for (int level = 1; level <= depth && previous > 0; ++level) {
    const auto alive = static_cast<std::size_t>(
        std::count_if(survival.begin(), survival.end(), [level](int s) { return s >= level; }));
    out.push_back(static_cast<double>(alive) / static_cast<double>(previous));
    previous = alive;
  }
  return out;
}

}  // namespace detail

template <fsa::Automaton A>
fsa::TrajectoryOf<A> sample_trajectory(const A& automaton, const fsa::StateOf<A>& state, int depth, Engine& rng) {
  fsa::TrajectoryOf<A> t{state, {}, false};
  for (int i = 0; i < depth; ++i) {
    const auto legal = automaton.legal_actions(t.current);
    if (legal.empty()) {
      t.terminated_early = true;
      break;
    }
    const auto& a = legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
    t.current = fsa::legal_successor(automaton, t.current, a);
    t.actions_taken.push_back(a);
  }
  return t;
}

template <fsa::Automaton A>
EstimateResult naive_estimate(const A& automaton, const fsa::StateOf<A>& source, const fsa::StateOf<A>& acceptor,
                              const EstimatorConfig& config) {
  config.validate();
  EstimateResult result;
  if (!detail::check_inputs(automaton, source, acceptor, result)) return result;

  using State = fsa::StateOf<A>;
  using Action = fsa::ActionOf<A>;
  struct Entry {
    State state;
    std::vector<Action> actions;
    bool terminal = false;
  };

  std::vector<Entry> frontier{{source, {}, false}};
  bool exact = true;
  for (int level = 1; level <= config.depth_m; ++level) {
    Engine rng = make_engine(config.seed, static_cast<std::uint64_t>(level));
    std::vector<std::vector<Action>> expansions(frontier.size());
    std::vector<std::size_t> offsets(frontier.size() + 1, 0);
    for (std::size_t j = 0; j < frontier.size(); ++j) {
      if (!frontier[j].terminal) expansions[j] = automaton.legal_actions(frontier[j].state);
      // A branch without legal actions continues as one finished sequence.
      offsets[j + 1] = offsets[j] + std::max<std::size_t>(expansions[j].size(), 1);
    }
    const std::size_t total = offsets.back();
    std::vector<std::size_t> chosen;
    if (total > config.max_frontier) {
      exact = false;
      chosen = sample_without_replacement(total, config.max_frontier, rng);
    } else {
      chosen.resize(total);
      std::iota(chosen.begin(), chosen.end(), std::size_t{0});
    }
    std::vector<Entry> next;
    next.reserve(chosen.size());
    for (std::size_t idx : chosen) {
      const auto parent_it = std::upper_bound(offsets.begin(), offsets.end(), idx) - 1;
      const auto j = static_cast<std::size_t>(parent_it - offsets.begin());
      const Entry& parent = frontier[j];
      if (expansions[j].empty()) {
        next.push_back({parent.state, parent.actions, true});
        continue;
      }
      const Action& a = expansions[j][idx - offsets[j]];
      Entry child{fsa::legal_successor(automaton, parent.state, a), parent.actions, false};
      child.actions.push_back(a);
      next.push_back(std::move(child));
    }
    frontier = std::move(next);
  }

  std::vector<int> survival;
  survival.reserve(frontier.size());
  std::size_t accepted = 0;
  std::size_t live = 0;
  for (const auto& entry : frontier) {
    const int s = detail::survival_depth(automaton, acceptor, entry.actions, entry.terminal, config.depth_m);
    survival.push_back(s);
    if (s == config.depth_m) ++accepted;
    if (entry.terminal) {
      ++result.early_termination_count;
    } else {
      ++live;
    }
  }
  detail::finish_proportion(result, accepted, frontier.size());
  result.level_values = detail::level_ratios(survival, config.depth_m);
  result.exact = exact;
  result.degenerate_frontier = live == 0 && result.early_termination_count > 0;
  return result;
}

template <fsa::Automaton A>
EstimateResult intermediate_estimate(const A& automaton, const fsa::StateOf<A>& source,
                                     const fsa::StateOf<A>& acceptor, const EstimatorConfig& config) {
  config.validate();
  EstimateResult result;
  if (!detail::check_inputs(automaton, source, acceptor, result)) return result;

  using State = fsa::StateOf<A>;
  using Action = fsa::ActionOf<A>;
  struct Particle {
    State source;
    State acceptor;
    double weight;
    bool terminal;
  };
  struct Candidate {
    std::size_t parent;
    std::optional<Action> action;  // empty: carry a finished branch forward
    double weight;
  };

  std::vector<Particle> frontier{{source, acceptor, 1.0, false}};
  double p_hat = 1.0;
  bool exact = true;
  for (int level = 1; level <= config.depth_m; ++level) {
    Engine rng = make_engine(config.seed, static_cast<std::uint64_t>(level));
    std::vector<Candidate> candidates;
    double parent_total = 0.0;
    double kept_total = 0.0;
    for (std::size_t j = 0; j < frontier.size(); ++j) {
      const Particle& p = frontier[j];
      parent_total += p.weight;
      const auto source_actions = p.terminal ? std::vector<Action>{} : automaton.legal_actions(p.source);
      if (source_actions.empty()) {
        if (p.terminal || automaton.legal_actions(p.acceptor).empty()) {
          candidates.push_back({j, std::nullopt, p.weight});
          kept_total += p.weight;
        } else {
          ++result.early_termination_count;
        }
        continue;
      }
      const auto acceptor_actions = automaton.legal_actions(p.acceptor);
      const double share = p.weight / static_cast<double>(source_actions.size());
      std::size_t accepted = 0;
      for (const auto& a : source_actions) {
        if (detail::contains(acceptor_actions, a)) {
          candidates.push_back({j, a, share});
          ++accepted;
        }
      }
      // w * (accepted / k) is exactly w when every child survives.
      kept_total += p.weight * (static_cast<double>(accepted) / static_cast<double>(source_actions.size()));
    }

    if (candidates.empty()) {
      result.level_values.push_back(0.0);
      p_hat = 0.0;
      frontier.clear();
      break;
    }

    std::vector<std::size_t> keep;
    std::vector<double> weights;
    double post_total = kept_total;
    if (candidates.size() > config.max_frontier) {
      exact = false;
      std::vector<double> raw(candidates.size());
      std::transform(candidates.begin(), candidates.end(), raw.begin(), [](const Candidate& c) { return c.weight; });
      Resampled r = config.resampling == Resampling::kWeightProportional
                        ? systematic_resample(raw, config.max_frontier, rng)
                        : uniform_rescale_resample(raw, config.max_frontier, rng);
      keep = std::move(r.indices);
      weights = std::move(r.weights);
      if (config.resampling == Resampling::kUniformRescale) {
        post_total = std::accumulate(weights.begin(), weights.end(), 0.0);
      }
    } else {
      keep.resize(candidates.size());
      std::iota(keep.begin(), keep.end(), std::size_t{0});
      weights.resize(candidates.size());
      std::transform(candidates.begin(), candidates.end(), weights.begin(), [](const Candidate& c) { return c.weight; });
    }

    const double v = post_total / parent_total;
    result.level_values.push_back(v);
    p_hat *= v;

    std::vector<Particle> next;
    next.reserve(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      const Candidate& c = candidates[keep[i]];
      const Particle& parent = frontier[c.parent];
      // Weights are kept relative to the level total; v carries the scale.
      const double w = weights[i] / post_total;
      if (!c.action) {
        next.push_back({parent.source, parent.acceptor, w, true});
      } else {
        next.push_back({fsa::legal_successor(automaton, parent.source, *c.action),
                        fsa::legal_successor(automaton, parent.acceptor, *c.action), w, false});
      }
    }
    frontier = std::move(next);
  }

  std::size_t live = 0;
  for (const auto& p : frontier) {
    if (p.terminal) {
      ++result.early_termination_count;
    } else {
      ++live;
    }
  }
  result.p_hat = p_hat;
  result.samples_used = frontier.size();
  result.exact = exact;
  result.degenerate_frontier = live == 0 && result.early_termination_count > 0;
  const auto n = static_cast<double>(config.max_frontier);
  if (p_hat == 0.0) {
    result.standard_error = 3.0 / n;
    result.zero_rule_of_three = true;
  } else {
    double se = 0.0;
    for (double v : result.level_values) se += (1.0 - v) * std::sqrt(v / n);
    result.standard_error = se;
  }
  return result;
}

template <fsa::Automaton A>
EstimateResult path_sample_estimate(const A& automaton, const fsa::StateOf<A>& source,
                                    const fsa::StateOf<A>& acceptor, const EstimatorConfig& config) {
  config.validate();
  EstimateResult result;
  if (!detail::check_inputs(automaton, source, acceptor, result)) return result;
  std::vector<int> survival;
  survival.reserve(config.max_frontier);
  std::size_t accepted = 0;
  for (std::size_t i = 0; i < config.max_frontier; ++i) {
    Engine rng = make_engine(config.seed, i);
    const auto t = sample_trajectory(automaton, source, config.depth_m, rng);
    if (t.terminated_early) ++result.early_termination_count;
    const int s = detail::survival_depth(automaton, acceptor, t.actions_taken, t.terminated_early, config.depth_m);
    survival.push_back(s);
    if (s == config.depth_m) ++accepted;
  }
  detail::finish_proportion(result, accepted, config.max_frontier);
  result.level_values = detail::level_ratios(survival, config.depth_m);
  result.degenerate_frontier = result.early_termination_count == config.max_frontier;
  return result;
}

template <fsa::Automaton A>
EstimateResult estimate(const A& automaton, const fsa::StateOf<A>& source, const fsa::StateOf<A>& acceptor,
                        const EstimatorConfig& config) {
  return config.kind == EstimatorKind::kNaive ? naive_estimate(automaton, source, acceptor, config)
                                              : intermediate_estimate(automaton, source, acceptor, config);
}

template <fsa::Automaton A>
PrecisionRecall precision_recall(const A& automaton, const fsa::StateOf<A>& truth,
                                 const fsa::StateOf<A>& predicted, const EstimatorConfig& config) {
  EstimatorConfig precision_cfg = config;
  precision_cfg.seed = derive_seed(config.seed, detail::kPrecisionStream);
  EstimatorConfig recall_cfg = config;
  recall_cfg.seed = derive_seed(config.seed, detail::kRecallStream);
  return {estimate(automaton, predicted, truth, precision_cfg), estimate(automaton, truth, predicted, recall_cfg)};
}

}  // namespace statebench::estimators
