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
#include <string>
#include <string_view>

#include "statebench/chess/position.hpp"

namespace statebench::pipeline {

enum class ParseStatus { kOk, kMalformedFen, kIllegalPosition, kNoFenFound };

std::string_view to_string(ParseStatus status);
std::optional<ParseStatus> parse_status_from_string(std::string_view text);

struct ParsedPrediction {
  /// Present iff status is kOk.
  std::optional<chess::ChessState> state;
  ParseStatus status = ParseStatus::kNoFenFound;
  /// The extracted FEN-shaped span, whenever one was found.
  std::optional<std::string> fen_text;
};

/// Extracts the last FEN-shaped span of a model response and parses it.
///
/// A span starts at a token made of piece letters, digits and at least six
/// "/" separators (surrounding quotes, backticks, brackets and trailing
/// punctuation are ignored, as is a "label:" prefix). It extends over the
/// following tokens that look like side-to-move, castling, en-passant and
/// counter fields, in that order.
ParsedPrediction parse_prediction(std::string_view raw_response);

/// Placement-only reading of a FEN span, without legality checks. Used to
/// score board accuracy of predictions that are not legal positions.
std::optional<chess::ChessState> parse_placement(std::string_view fen_text);

}  // namespace statebench::pipeline
