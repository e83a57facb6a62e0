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

#include "statebench/chess/pgn.hpp"

#include <cctype>
#include <optional>

#include "statebench/chess/fen.hpp"
#include "statebench/chess/movegen.hpp"
#include "statebench/chess/san.hpp"

namespace statebench::chess {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool is_result(std::string_view t) { return t == "1-0" || t == "0-1" || t == "1/2-1/2" || t == "*"; }

struct PendingGame {
  std::map<std::string, std::string> headers;
  std::vector<std::string> sans;
  std::optional<std::string> error;
  bool has_tags = false;
  bool has_movetext = false;

  bool empty() const { return !has_tags && !has_movetext && !error; }
};

class PgnScanner {
 public:
  PgnScanner(std::string_view text, std::string_view id_prefix) : text_(text), id_prefix_(id_prefix) {}

  PgnParseResult run() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%' && at_line_start()) {
        skip_line();
      } else if (is_space(c)) {
        ++pos_;
      } else if (c == '[') {
        if (current_.has_movetext || current_.error) finish();
        read_tag();
      } else if (c == '{') {
        const auto close = text_.find('}', pos_);
        if (close == std::string_view::npos) {
          fail("unterminated comment");
          pos_ = text_.size();
        } else {
          pos_ = close + 1;
        }
      } else if (c == ';') {
        skip_line();
      } else if (c == '(') {
        skip_variation();
      } else if (c == ')') {
        fail("unbalanced ')'");
        ++pos_;
      } else if (c == '$') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        read_token();
      }
    }
    finish();
    return std::move(result_);
  }

 private:
  bool at_line_start() const { return pos_ == 0 || text_[pos_ - 1] == '\n'; }

  void skip_line() {
    const auto nl = text_.find('\n', pos_);
    pos_ = nl == std::string_view::npos ? text_.size() : nl + 1;
  }

  void fail(const std::string& why) {
    if (!current_.error) current_.error = why;
  }

  void read_tag() {
    const std::size_t line_end = std::min(text_.find('\n', pos_), text_.size());
    std::size_t i = pos_ + 1;
    auto skip_ws = [&] {
      while (i < line_end && is_space(text_[i])) ++i;
    };
    skip_ws();
    const std::size_t key_start = i;
    while (i < line_end && (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_')) ++i;
    std::string key(text_.substr(key_start, i - key_start));
    skip_ws();
    std::string value;
    bool ok = !key.empty() && i < line_end && text_[i] == '"';
    if (ok) {
      ++i;
      bool closed = false;
      while (i < line_end) {
        if (text_[i] == '\\' && i + 1 < line_end) {
          value += text_[i + 1];
          i += 2;
        } else if (text_[i] == '"') {
          closed = true;
          ++i;
          break;
        } else {
          value += text_[i++];
        }
      }
      skip_ws();
      ok = closed && i < line_end && text_[i] == ']';
    }
    current_.has_tags = true;
    if (!ok) {
      fail("malformed tag pair");
      pos_ = line_end;
      return;
    }
    current_.headers[key] = value;
    pos_ = i + 1;
  }

  void skip_variation() {
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '{') {
        const auto close = text_.find('}', pos_);
        if (close == std::string_view::npos) break;
        pos_ = close + 1;
        continue;
      }
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) {
        ++pos_;
        return;
      }
      ++pos_;
    }
    fail("unterminated variation");
    pos_ = text_.size();
  }

  void read_token() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) && std::string_view("{}()[];").find(text_[pos_]) == std::string_view::npos) {
      ++pos_;
    }
    std::string_view token = text_.substr(start, pos_ - start);
    if (is_result(token)) {
      current_.has_movetext = true;
      if (!current_.headers.count("Result")) current_.headers["Result"] = std::string(token);
      finish();
      return;
    }
    // Move numbers: "12.", "12...", or glued to the move as in "12.e4".
    std::size_t i = 0;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
    std::size_t dots = i;
    while (dots < token.size() && token[dots] == '.') ++dots;
    if (dots > i) token.remove_prefix(dots);
    if (token.empty()) return;
    current_.has_movetext = true;
    current_.sans.emplace_back(token);
  }

  void finish() {
    if (current_.empty()) {
      current_ = PendingGame{};
      return;
    }
    ++game_index_;
    PendingGame game = std::move(current_);
    current_ = PendingGame{};

    std::string id;
    if (auto it = game.headers.find("GameId"); it != game.headers.end() && !it->second.empty()) {
      id = it->second;
    } else if (auto site = game.headers.find("Site"); site != game.headers.end() && site->second.find("://") != std::string::npos) {
      id = site->second;
    } else {
      id = std::string(id_prefix_) + "-" + std::to_string(game_index_);
    }

    if (game.error) {
      result_.issues.push_back({PgnIssue::Kind::kMalformedPgn, game_index_, id, *game.error});
      return;
    }
    if (auto fen = game.headers.find("FEN"); fen != game.headers.end()) {
      bool standard = false;
      try {
        standard = parse_fen(fen->second) == ChessState::initial();
      } catch (const FenError&) {
      }
      if (!standard) {
        result_.issues.push_back({PgnIssue::Kind::kMalformedPgn, game_index_, id, "non-standard start position"});
        return;
      }
    }

    GameRecord record;
    record.game_id = id;
    record.headers = std::move(game.headers);
    ChessState state = ChessState::initial();
    for (std::size_t ply = 0; ply < game.sans.size(); ++ply) {
      try {
        const UciMove move = parse_san(state, game.sans[ply]);
        record.moves.push_back(move);
        state = make_move(state, move);
      } catch (const SanError& e) {
        result_.issues.push_back(
            {PgnIssue::Kind::kIllegalSanMove, game_index_, id, "ply " + std::to_string(ply + 1) + ": " + e.what()});
        return;
      }
    }
    result_.games.push_back(std::move(record));
  }

  std::string_view text_;
  std::string_view id_prefix_;
  std::size_t pos_ = 0;
  std::size_t game_index_ = 0;
  PendingGame current_;
  PgnParseResult result_;
};

}  // namespace

PgnParseResult parse_pgn(std::string_view text, std::string_view id_prefix) {
  return PgnScanner(text, id_prefix).run();
}

std::string format_pgn(const std::vector<GameRecord>& games) {
  std::string out;
  for (const auto& game : games) {
    std::string result = "*";
    for (const auto& [key, value] : game.headers) {
      if (key == "Result") result = value;
      std::string escaped;
      for (char c : value) {
        if (c == '"' || c == '\\') escaped += '\\';
        escaped += c;
      }
      out += "[" + key + " \"" + escaped + "\"]\n";
    }
    if (!game.headers.empty()) out += '\n';
    std::string movetext = format_movetext(ChessState::initial(), game.moves);
    movetext += movetext.empty() ? result : " " + result;
    std::size_t line_len = 0;
    std::size_t i = 0;
    while (i < movetext.size()) {
      std::size_t j = movetext.find(' ', i);
      if (j == std::string::npos) j = movetext.size();
      const std::size_t word = j - i;
      if (line_len && line_len + 1 + word > 79) {
        out += '\n';
        line_len = 0;
      } else if (line_len) {
        out += ' ';
        ++line_len;
      }
      out.append(movetext, i, word);
      line_len += word;
      i = j + 1;
    }
    out += "\n\n";
  }
  return out;
}

}  // namespace statebench::chess
