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

#include <optional>
#include <span>
#include <stdexcept>

namespace statebench::report {

/// Tau-b is undefined because one sequence is constant.
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Kendall's tau-b with tie correction, O(n log n). Throws
/// std::invalid_argument for unequal lengths or fewer than two points and
/// DegenerateInput when either sequence is all ties.
double kendall_tau(std::span<const double> xs, std::span<const double> ys);

/// As kendall_tau, but undefined inputs give nothing.
std::optional<double> kendall_tau_or_null(std::span<const double> xs, std::span<const double> ys);

}  // namespace statebench::report
