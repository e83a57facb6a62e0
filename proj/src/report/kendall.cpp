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

#include "statebench/report/kendall.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace statebench::report {

namespace {

// Pairs tied within runs of equal keys in an already sorted sequence.
template <class Eq>
std::uint64_t tied_pairs(std::size_t n, Eq&& equal) {
  std::uint64_t ties = 0;
  std::uint64_t run = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (equal(i - 1, i)) {
      ++run;
    } else {
      ties += run * (run - 1) / 2;
      run = 1;
    }
  }
  return ties + run * (run - 1) / 2;
}

// Merge sort that counts inversions (swaps) of `v`.
std::uint64_t sort_counting_swaps(std::vector<double>& v, std::vector<double>& buffer, std::size_t lo,
                                  std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t swaps = sort_counting_swaps(v, buffer, lo, mid) + sort_counting_swaps(v, buffer, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += mid - i;
      buffer[k++] = v[j++];
    } else {
      buffer[k++] = v[i++];
    }
  }
  while (i < mid) buffer[k++] = v[i++];
  while (j < hi) buffer[k++] = v[j++];
  std::copy(buffer.begin() + static_cast<std::ptrdiff_t>(lo), buffer.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

}  // namespace

// Knight's algorithm: sort by (x, y), count ties, then count discordant
// pairs as merge-sort swaps on y.
double kendall_tau(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("kendall_tau needs sequences of equal length");
  const std::size_t n = xs.size();
  if (n < 2) throw std::invalid_argument("kendall_tau needs at least two points");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return xs[a] != xs[b] ? xs[a] < xs[b] : ys[a] < ys[b];
  });
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = xs[order[i]];
    y[i] = ys[order[i]];
  }

  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t tie_x = tied_pairs(n, [&](std::size_t a, std::size_t b) { return x[a] == x[b]; });
  const std::uint64_t tie_xy =
      tied_pairs(n, [&](std::size_t a, std::size_t b) { return x[a] == x[b] && y[a] == y[b]; });
  std::vector<double> buffer(n);
  const std::uint64_t swaps = sort_counting_swaps(y, buffer, 0, n);
  const std::uint64_t tie_y = tied_pairs(n, [&](std::size_t a, std::size_t b) { return y[a] == y[b]; });

  if (tie_x == total || tie_y == total) throw DegenerateInput("kendall_tau is undefined for a constant sequence");
  // concordant - discordant = total - tie_x - tie_y + tie_xy - 2 * swaps
  const double numerator = static_cast<double>(total) - static_cast<double>(tie_x) - static_cast<double>(tie_y) +
                           static_cast<double>(tie_xy) - 2.0 * static_cast<double>(swaps);
  const double denominator =
      std::sqrt(static_cast<double>(total - tie_x)) * std::sqrt(static_cast<double>(total - tie_y));
  return std::clamp(numerator / denominator, -1.0, 1.0);
}

std::optional<double> kendall_tau_or_null(std::span<const double> xs, std::span<const double> ys) {
  try {
    return kendall_tau(xs, ys);
  } catch (const DegenerateInput&) {
    return std::nullopt;
  }
}

}  // namespace statebench::report
