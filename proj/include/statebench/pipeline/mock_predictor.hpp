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

// Offline stand-ins for a language model.

#pragma once

#include <cstdint>
#include <string>

#include "statebench/pipeline/llm_client.hpp"

namespace statebench::pipeline {

/// Answers with the exact FEN of the true position.
class EchoPredictor : public Predictor {
 public:
  std::string model_name() const override { return "mock-echo"; }
  std::string complete(const std::string& prompt, const EvalTask& task) override;
};

/// Answers "I think the board is: <FEN>".
class ProseWrapPredictor : public Predictor {
 public:
  std::string model_name() const override { return "mock-prose"; }
  std::string complete(const std::string& prompt, const EvalTask& task) override;
};

/// Answers with the true FEN after `corruptions` random piece removals or
/// displacements. The perturbation depends only on the seed and the task.
class CorruptingPredictor : public Predictor {
 public:
  CorruptingPredictor(int corruptions, std::uint64_t seed);
  std::string model_name() const override;
  std::string complete(const std::string& prompt, const EvalTask& task) override;

 private:
  int corruptions_;
  std::uint64_t seed_;
};

}  // namespace statebench::pipeline
