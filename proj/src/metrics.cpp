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

#include "statebench/metrics.hpp"

#include <cmath>
#include <numeric>

#include "statebench/chess/fen.hpp"

namespace statebench::metrics {

void MetricConfig::validate() const {
  if (!(kernel_lambda > 0.0)) throw std::invalid_argument("kernel_lambda must be positive");
}

std::string comparison_text(const chess::ChessState& state, ComparisonFields fields) {
  return fields == ComparisonFields::kFullFen ? chess::format_fen(state) : chess::format_fen_core(state);
}

bool exact_match(const chess::ChessState& truth, const chess::ChessState& predicted, ComparisonFields fields) {
  if (fields == ComparisonFields::kFullFen) return truth == predicted;
  chess::ChessState a = truth;
  chess::ChessState b = predicted;
  a.set_halfmove_clock(0);
  b.set_halfmove_clock(0);
  a.set_fullmove_number(1);
  b.set_fullmove_number(1);
  return a == b;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Single row over the shorter string.
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

double edit_kernel(std::size_t distance, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("edit kernel lambda must be positive");
  return std::exp(-lambda * static_cast<double>(distance));
}

double board_accuracy(const chess::ChessState& truth, const chess::ChessState& predicted) {
  int agree = 0;
  for (int sq = 0; sq < 64; ++sq) {
    if (truth.piece_at(chess::Square(sq)) == predicted.piece_at(chess::Square(sq))) ++agree;
  }
  return agree / 64.0;
}

}  // namespace statebench::metrics
