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

#include "statebench/pipeline/prediction.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

#include "statebench/chess/fen.hpp"

namespace statebench::pipeline {

namespace {

constexpr std::array<std::pair<ParseStatus, std::string_view>, 4> kStatusNames{{
    {ParseStatus::kOk, "ok"},
    {ParseStatus::kMalformedFen, "malformed_fen"},
    {ParseStatus::kIllegalPosition, "illegal_position"},
    {ParseStatus::kNoFenFound, "no_fen_found"},
}};

constexpr std::string_view kLeadingJunk = "`'\"*([{<";
constexpr std::string_view kTrailingJunk = "`'\"*)]}>.,;:!?";

std::string_view trim_token(std::string_view t) {
  while (!t.empty() && kLeadingJunk.find(t.front()) != std::string_view::npos) t.remove_prefix(1);
  while (!t.empty() && kTrailingJunk.find(t.back()) != std::string_view::npos) t.remove_suffix(1);
  return t;
}

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

bool is_placement_like(std::string_view t) {
  if (std::count(t.begin(), t.end(), '/') < 6) return false;
  return std::all_of(t.begin(), t.end(), [](char c) {
    return c == '/' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::string_view("pnbrqkPNBRQK").find(c) != std::string_view::npos;
  });
}

std::string_view placement_candidate(std::string_view token) {
  const auto colon = token.rfind(':');
  if (colon != std::string_view::npos) token.remove_prefix(colon + 1);
  return trim_token(token);
}

bool is_side(std::string_view t) { return t == "w" || t == "b"; }

bool is_castling(std::string_view t) {
  if (t == "-") return true;
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
    return std::string_view("KQkq").find(c) != std::string_view::npos;
  });
}

bool is_en_passant(std::string_view t) {
  return t == "-" || (t.size() == 2 && t[0] >= 'a' && t[0] <= 'h' && t[1] >= '1' && t[1] <= '8');
}

bool is_counter(std::string_view t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::string_view to_string(ParseStatus status) {
  for (const auto& [s, name] : kStatusNames) {
    if (s == status) return name;
  }
  return "unknown";
}

std::optional<ParseStatus> parse_status_from_string(std::string_view text) {
  for (const auto& [s, name] : kStatusNames) {
    if (name == text) return s;
  }
  return std::nullopt;
}

ParsedPrediction parse_prediction(std::string_view raw_response) {
  ParsedPrediction out;
  const auto tokens = tokenize(raw_response);
  std::size_t start = tokens.size();
  for (std::size_t i = tokens.size(); i-- > 0;) {
    if (is_placement_like(placement_candidate(tokens[i]))) {
      start = i;
      break;
    }
  }
  if (start == tokens.size()) return out;

  std::string span(placement_candidate(tokens[start]));
  using FieldTest = bool (*)(std::string_view);
  constexpr std::array<FieldTest, 5> kFields{is_side, is_castling, is_en_passant, is_counter, is_counter};
  std::size_t next = start + 1;
  for (FieldTest test : kFields) {
    if (next >= tokens.size()) break;
    const auto field = trim_token(tokens[next]);
    if (!test(field)) break;
    span += ' ';
    span += field;
    ++next;
    // Stop once a field carried trailing punctuation: it ended the sentence.
    if (field.size() != tokens[next - 1].size() && tokens[next - 1].back() != '`') break;
  }
  out.fen_text = span;
  try {
    out.state = chess::parse_fen(span);
    out.status = ParseStatus::kOk;
  } catch (const chess::FenError& e) {
    out.status = e.kind() == chess::FenError::Kind::kIllegalPosition ? ParseStatus::kIllegalPosition
                                                                      : ParseStatus::kMalformedFen;
  }
  return out;
}

std::optional<chess::ChessState> parse_placement(std::string_view fen_text) {
  const auto tokens = tokenize(fen_text);
  if (tokens.empty()) return std::nullopt;
  try {
    return chess::parse_fen_unchecked(std::string(tokens[0]) + " w - - 0 1");
  } catch (const chess::FenError&) {
    return std::nullopt;
  }
}

}  // namespace statebench::pipeline
