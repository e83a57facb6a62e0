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

#include "statebench/pipeline/prompt.hpp"

#include <array>
#include <utility>

#include "statebench/chess/san.hpp"
#include "statebench/pipeline/hash.hpp"

namespace statebench::pipeline {

namespace {

constexpr std::string_view kFenV1 =
    "You will be given the moves of a chess game in PGN notation. The game starts from the standard "
    "initial position.\n"
    "\n"
    "Moves: {movetext}\n"
    "\n"
    "Convert the position reached after these moves to the FEN (Forsyth-Edwards Notation) standard board "
    "representation, including side to move, castling rights, en passant square, halfmove clock and "
    "fullmove number. Answer with a single FEN string.";

// Shorter variant that asks for the bare answer, for models that pad replies.
constexpr std::string_view kFenTerse =
    "Chess game from the standard starting position: {movetext}\n"
    "Reply with only the FEN of the final position, nothing else.";

constexpr std::string_view kNoMoves = "(no moves have been played yet)";

constexpr std::array<std::pair<std::string_view, std::string_view>, 2> kTemplates{
    {{"fen-v1", kFenV1}, {"fen-terse", kFenTerse}}};

}  // namespace

std::vector<std::string> template_ids() {
  std::vector<std::string> out;
  for (const auto& [id, text] : kTemplates) out.emplace_back(id);
  return out;
}

std::string_view template_text(std::string_view template_id) {
  for (const auto& [id, text] : kTemplates) {
    if (id == template_id) return text;
  }
  throw UnknownTemplate("unknown prompt template: " + std::string(template_id));
}

std::string build_prompt(const EvalTask& task, std::string_view template_id) {
  std::string text(template_text(template_id));
  const std::string movetext =
      task.moves.empty() ? std::string(kNoMoves) : chess::format_movetext(chess::ChessState::initial(), task.moves);
  const std::string_view placeholder = "{movetext}";
  const auto at = text.find(placeholder);
  text.replace(at, placeholder.size(), movetext);
  return text;
}

std::string prompt_fingerprint(std::string_view template_id, std::string_view prompt) {
  std::string material(template_id);
  material.push_back('\0');
  material.append(prompt);
  return sha256_hex(material);
}

}  // namespace statebench::pipeline
