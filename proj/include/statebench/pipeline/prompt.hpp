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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "statebench/pipeline/corpus.hpp"

namespace statebench::pipeline {

inline constexpr std::string_view kDefaultTemplateId = "fen-v1";

class UnknownTemplate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> template_ids();

/// The template text with its "{movetext}" placeholder. Throws UnknownTemplate.
std::string_view template_text(std::string_view template_id);

/// Prompt asking for the FEN after the task's moves.
std::string build_prompt(const EvalTask& task, std::string_view template_id = kDefaultTemplateId);

/// SHA-256 over the template id and the prompt text.
std::string prompt_fingerprint(std::string_view template_id, std::string_view prompt);

}  // namespace statebench::pipeline
