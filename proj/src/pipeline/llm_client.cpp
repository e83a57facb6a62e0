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

#include "statebench/pipeline/llm_client.hpp"

#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace statebench::pipeline {

namespace {

// Splits "https://host:port/v1" into "https://host:port" and "/v1".
std::pair<std::string, std::string> split_base_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw std::invalid_argument("api base URL needs a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  std::string origin = path_start == std::string::npos ? url : url.substr(0, path_start);
  std::string path = path_start == std::string::npos ? "" : url.substr(path_start);
  while (!path.empty() && path.back() == '/') path.pop_back();
  return {std::move(origin), std::move(path)};
}

bool retryable(int status) { return status == 429 || status >= 500; }

}  // namespace

void LlmConfig::validate() const {
  if (max_concurrency < 1) throw std::invalid_argument("max_concurrency must be at least 1");
  if (!(temperature >= 0.0)) throw std::invalid_argument("temperature must be non-negative");
  if (max_retries < 0) throw std::invalid_argument("max_retries must be non-negative");
  split_base_url(api_base_url);
}

LlmClient::LlmClient(LlmConfig config, std::string api_key)
    : config_(std::move(config)), api_key_(std::move(api_key)) {
  config_.validate();
  std::tie(scheme_host_port_, path_) = split_base_url(config_.api_base_url);
  sleeper_ = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

std::unique_ptr<LlmClient> LlmClient::from_environment(LlmConfig config) {
  const char* key = std::getenv("LLM_API_KEY");
  if (key == nullptr || *key == '\0') throw AuthError("LLM_API_KEY is not set");
  return std::make_unique<LlmClient>(std::move(config), key);
}

std::string LlmClient::complete(const std::string& prompt, const EvalTask& /*task*/) {
  nlohmann::json body;
  body["model"] = config_.model_name;
  body["temperature"] = config_.temperature;
  body["messages"] = nlohmann::json::array({{{"role", "user"}, {"content", prompt}}});
  const std::string payload = body.dump();

  httplib::Client client(scheme_host_port_);
  const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(config_.request_timeout);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  const httplib::Headers headers{{"Authorization", "Bearer " + api_key_}};

  std::string last_error;
  auto backoff = config_.initial_backoff;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) {
      sleeper_(backoff);
      backoff *= 2;
    }
    ++requests_;
    const auto response = client.Post(path_ + "/chat/completions", headers, payload, "application/json");
    if (!response) {
      last_error = "connection failed: " + httplib::to_string(response.error());
      continue;
    }
    if (response->status == 401 || response->status == 403) {
      throw AuthError("model API rejected the credential (HTTP " + std::to_string(response->status) + ")");
    }
    if (retryable(response->status)) {
      last_error = "HTTP " + std::to_string(response->status);
      continue;
    }
    if (response->status != 200) {
      throw TransportError("HTTP " + std::to_string(response->status) + ": " + response->body.substr(0, 200));
    }
    try {
      const auto reply = nlohmann::json::parse(response->body);
      return reply.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw TransportError(std::string("unexpected response body: ") + e.what());
    }
  }
  throw TransportError("giving up after " + std::to_string(config_.max_retries + 1) + " attempts: " + last_error);
}

}  // namespace statebench::pipeline
