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
#include <filesystem>
#include <string>
#include <vector>

#include "statebench/pipeline/llm_client.hpp"
#include "statebench/pipeline/records.hpp"

namespace statebench::pipeline {

struct PredictOptions {
  std::string template_id = std::string(kDefaultTemplateId);
  std::size_t max_concurrency = 4;
};

struct PredictStats {
  std::size_t cached = 0;
  std::size_t queried = 0;
  std::size_t transport_failures = 0;
};

/// One record per task, in task order. Records already present in
/// `cache_path` under the same (prompt fingerprint, model name) are reused
/// without a query; new ones are appended to it in task order as they
/// complete. Transport failures yield in-memory records flagged
/// transport_failed and are not written. AuthError aborts the run.
std::vector<EvalRecord> predict_states(const std::vector<EvalTask>& tasks, Predictor& predictor,
                                       const std::filesystem::path& cache_path, const PredictOptions& options,
                                       PredictStats* stats = nullptr);

}  // namespace statebench::pipeline
