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

// Chat-completions client.

#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "statebench/pipeline/corpus.hpp"
#include "statebench/pipeline/prompt.hpp"

namespace statebench::pipeline {

struct LlmConfig {
  std::string api_base_url = "https://api.openai.com/v1";
  std::string model_name = "gpt-4o";
  double temperature = 0.0;
  int max_retries = 5;
  std::chrono::milliseconds request_timeout{60000};
  std::size_t max_concurrency = 4;
  std::string prompt_template_id = std::string(kDefaultTemplateId);
  /// First retry delay; doubles on each further attempt.
  std::chrono::milliseconds initial_backoff{500};

  /// Throws std::invalid_argument unless max_concurrency >= 1,
  /// temperature >= 0 and max_retries >= 0.
  void validate() const;
};

/// 401 or 403: retrying cannot help.
class AuthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request failed for good, after retries where they apply.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Source of model answers for the prediction stage.
class Predictor {
 public:
  virtual ~Predictor() = default;
  virtual std::string model_name() const = 0;
  /// Answer to `prompt`. The task is available to test doubles; a real
  /// model only sees the prompt. Must be safe to call concurrently.
  virtual std::string complete(const std::string& prompt, const EvalTask& task) = 0;
};

/// POSTs {api_base_url}/chat/completions with a bearer token. 429 and 5xx
/// responses and connection failures are retried with exponential backoff.
class LlmClient : public Predictor {
 public:
  LlmClient(LlmConfig config, std::string api_key);

  /// Reads the key from LLM_API_KEY; throws AuthError when it is unset.
  static std::unique_ptr<LlmClient> from_environment(LlmConfig config);

  std::string model_name() const override { return config_.model_name; }
  std::string complete(const std::string& prompt, const EvalTask& task) override;

  /// Number of HTTP requests sent so far, retries included.
  std::size_t requests_sent() const { return requests_.load(); }

  /// Replaces the sleep between retries (tests).
  void set_sleeper(std::function<void(std::chrono::milliseconds)> sleeper) { sleeper_ = std::move(sleeper); }

 private:
  LlmConfig config_;
  std::string api_key_;
  std::string scheme_host_port_;
  std::string path_;
  std::atomic<std::size_t> requests_{0};
  std::function<void(std::chrono::milliseconds)> sleeper_;
};

}  // namespace statebench::pipeline
