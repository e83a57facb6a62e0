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

#include "statebench/estimators.hpp"

#include <stdexcept>

namespace statebench::estimators {

namespace {

// Absorbs floating-point noise such as 1 / 0.1^3 = 1000.0000000000002.
std::uint64_t ceil_count(double x) {
  const double c = std::ceil(x - 1e-9 * std::max(1.0, x));
  return c < 1.0 ? 1 : static_cast<std::uint64_t>(c);
}

}  // namespace

void EstimatorConfig::validate() const {
  if (depth_m < 1) throw std::invalid_argument("depth_m must be at least 1");
  if (max_frontier < 1) throw std::invalid_argument("max_frontier must be at least 1");
}

double standard_error(double p_hat, std::size_t n) {
  if (n == 0) throw std::invalid_argument("standard_error needs n >= 1");
  if (p_hat < 0.0 || p_hat > 1.0) throw std::invalid_argument("p_hat must lie in [0, 1]");
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n));
}

std::uint64_t required_samples(EstimatorKind kind, double p, int m, double constant) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("required_samples needs 0 < p < 1");
  if (m < 1) throw std::invalid_argument("required_samples needs m >= 1");
  const double md = m;
  if (kind == EstimatorKind::kNaive) return ceil_count(std::pow(p, -md));
  return ceil_count(constant * md * md * (1.0 - p) * (1.0 - p) * p);
}

std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t n, Engine& rng) {
  if (n > population) throw std::invalid_argument("cannot sample more items than the population holds");
  // Selection sampling (Knuth's algorithm S): one pass, ascending output.
  std::vector<std::size_t> out;
  out.reserve(n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t needed = n;
  for (std::size_t i = 0; i < population && needed > 0; ++i) {
    const std::size_t remaining = population - i;
    if (unit(rng) * static_cast<double>(remaining) < static_cast<double>(needed)) {
      out.push_back(i);
      --needed;
    }
  }
  return out;
}

Resampled systematic_resample(std::span<const double> weights, std::size_t n, Engine& rng) {
  if (weights.empty() || n == 0) throw std::invalid_argument("systematic_resample needs weights and n >= 1");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  const double step = total / static_cast<double>(n);
  const double start = std::uniform_real_distribution<double>(0.0, step)(rng);
  Resampled r;
  r.indices.reserve(n);
  std::size_t j = 0;
  double cumulative = weights[0];
  for (std::size_t k = 0; k < n; ++k) {
    const double target = start + step * static_cast<double>(k);
    while (target >= cumulative && j + 1 < weights.size()) cumulative += weights[++j];
    r.indices.push_back(j);
  }
  r.weights.assign(n, step);
  return r;
}

Resampled uniform_rescale_resample(std::span<const double> weights, std::size_t n, Engine& rng) {
  Resampled r;
  r.indices = sample_without_replacement(weights.size(), n, rng);
  const double scale = static_cast<double>(weights.size()) / static_cast<double>(n);
  r.weights.reserve(n);
  for (std::size_t i : r.indices) r.weights.push_back(weights[i] * scale);
  return r;
}

}  // namespace statebench::estimators
