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

#include "statebench/pipeline/mock_predictor.hpp"

#include "statebench/chess/fen.hpp"
#include "statebench/chess/sampling.hpp"
#include "statebench/rng.hpp"

namespace statebench::pipeline {

std::string EchoPredictor::complete(const std::string& /*prompt*/, const EvalTask& task) {
  return chess::format_fen(task.true_state);
}

std::string ProseWrapPredictor::complete(const std::string& /*prompt*/, const EvalTask& task) {
  return "I think the board is: " + chess::format_fen(task.true_state);
}

CorruptingPredictor::CorruptingPredictor(int corruptions, std::uint64_t seed) : corruptions_(corruptions), seed_(seed) {
  if (corruptions < 0) throw std::invalid_argument("corruption count must be non-negative");
}

std::string CorruptingPredictor::model_name() const { return "mock-corrupt-" + std::to_string(corruptions_); }

std::string CorruptingPredictor::complete(const std::string& /*prompt*/, const EvalTask& task) {
  Engine rng = make_engine(seed_, fnv1a(task.record_id()));
  return chess::format_fen(chess::perturb_pieces(task.true_state, corruptions_, rng));
}

}  // namespace statebench::pipeline
