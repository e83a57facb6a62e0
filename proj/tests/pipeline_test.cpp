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

#include <gtest/gtest.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "statebench/chess/fen.hpp"
#include "statebench/chess/movegen.hpp"
#include "statebench/chess/pgn.hpp"
#include "statebench/chess/sampling.hpp"
#include "statebench/pipeline/corpus.hpp"
#include "statebench/pipeline/evaluate.hpp"
#include "statebench/pipeline/llm_client.hpp"
#include "statebench/pipeline/mock_predictor.hpp"
#include "statebench/pipeline/predict.hpp"
#include "statebench/pipeline/prediction.hpp"
#include "statebench/pipeline/prompt.hpp"
#include "statebench/pipeline/records.hpp"
#include "statebench/rng.hpp"

namespace statebench::pipeline {
namespace {

namespace fs = std::filesystem;
using chess::ChessState;
using chess::UciMove;

constexpr const char* kInitialFen = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1";
constexpr const char* kNoB1Knight = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/R1BQKBNR w KQkq - 0 1";

// Random games that never end before `plies`.
std::vector<chess::GameRecord> random_games(int count, int plies, std::uint64_t seed) {
  std::vector<chess::GameRecord> games;
  auto rng = make_engine(seed, 1);
  while (static_cast<int>(games.size()) < count) {
    auto moves = chess::random_playout(ChessState::initial(), plies, rng);
    if (static_cast<int>(moves.size()) < plies) continue;
    games.push_back({"g" + std::to_string(games.size()), std::move(moves), {}});
  }
  return games;
}

std::vector<UciMove> uci(std::initializer_list<const char*> texts) {
  std::vector<UciMove> out;
  for (const char* t : texts) out.push_back(*UciMove::parse(t));
  return out;
}

EvalTask task_from_moves(std::string game_id, std::vector<UciMove> moves) {
  chess::GameRecord game{std::move(game_id), std::move(moves), {}};
  game.moves.push_back(*UciMove::parse("a2a3"));  // make_task needs a strictly longer game
  if (!chess::is_legal_move([&] {
        auto s = ChessState::initial();
        for (std::size_t i = 0; i + 1 < game.moves.size(); ++i) s = chess::make_move(s, game.moves[i]);
        return s;
      }(),
                            game.moves.back())) {
    game.moves.back() = *UciMove::parse("a7a6");
  }
  return make_task(game, static_cast<int>(game.moves.size()) - 1);
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("statebench-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- ingest

TEST(IngestTest, FillsGroupFromLongGames) {
  IngestConfig config;
  config.group_lengths = {4};
  config.group_size = 2;
  const auto result = ingest_games(random_games(10, 20, 1), config);
  ASSERT_EQ(result.tasks.size(), 2u);
  EXPECT_TRUE(result.shortfalls.empty());
  for (const auto& t : result.tasks) {
    EXPECT_EQ(t.group_label, 4);
    EXPECT_EQ(t.truncation_length, 4);
    ASSERT_EQ(t.moves.size(), 4u);
    auto s = ChessState::initial();
    for (const auto& m : t.moves) s = chess::make_move(s, m);
    EXPECT_EQ(t.true_state, s);
  }
  EXPECT_NE(result.tasks[0].game_id, result.tasks[1].game_id);
}

TEST(IngestTest, ShortGamesAreNotEligible) {
  auto games = random_games(1, 3, 2);
  auto longer = random_games(1, 6, 3);
  longer[0].game_id = "long";
  games.push_back(longer[0]);
  IngestConfig config;
  config.group_lengths = {5};
  config.group_size = 2;
  const auto result = ingest_games(games, config);
  ASSERT_EQ(result.tasks.size(), 1u);
  EXPECT_EQ(result.tasks[0].game_id, "long");
  ASSERT_EQ(result.shortfalls.size(), 1u);
  EXPECT_EQ(result.shortfalls[0].group_label, 5);
  EXPECT_EQ(result.shortfalls[0].requested, 2u);
  EXPECT_EQ(result.shortfalls[0].filled, 1u);
}

TEST(IngestTest, LengthMustBeStrictlyShorterThanGame) {
  const auto games = random_games(1, 5, 4);
  EXPECT_THROW(make_task(games[0], 5), std::invalid_argument);
  EXPECT_EQ(make_task(games[0], 4).moves.size(), 4u);
  EXPECT_EQ(make_task(games[0], 0).true_state, ChessState::initial());
}

TEST(IngestTest, GroupsAreDisjointAndSeeded) {
  IngestConfig config;
  config.group_lengths = {5, 15, 25};
  config.group_size = 5;
  config.seed = 9;
  const auto games = random_games(20, 30, 5);
  const auto a = ingest_games(games, config);
  const auto b = ingest_games(games, config);
  ASSERT_EQ(a.tasks.size(), 15u);
  EXPECT_EQ(a.tasks, b.tasks);
  std::set<std::string> ids;
  for (const auto& t : a.tasks) ids.insert(t.game_id);
  EXPECT_EQ(ids.size(), 15u);
  config.seed = 10;
  EXPECT_NE(ingest_games(games, config).tasks, a.tasks);
}

TEST(IngestTest, ReadsPgnFileAndDirectory) {
  const fs::path file = fs::path(STATEBENCH_TEST_DATA) / "random_games.pgn";
  IngestConfig config;
  config.group_lengths = {5, 25};
  config.group_size = 10;
  const auto from_file = ingest_corpus(file, config);
  EXPECT_EQ(from_file.tasks.size(), 20u);
  EXPECT_TRUE(from_file.issues.empty());

  TempDir dir;
  fs::copy_file(file, dir.path() / "a.pgn");
  std::ofstream(dir.path() / "notes.txt") << "ignored";
  const auto from_dir = ingest_corpus(dir.path(), config);
  EXPECT_EQ(from_dir.tasks.size(), 20u);
  EXPECT_THROW(ingest_corpus(dir.path() / "missing.pgn", config), CorpusError);
}

// ---------------------------------------------------------------- prompt

TEST(PromptTest, ContainsNumberedMovetext) {
  const auto task = task_from_moves("p", uci({"e2e4", "e7e5", "g1f3"}));
  const auto prompt = build_prompt(task);
  EXPECT_NE(prompt.find("1. e4 e5 2. Nf3"), std::string::npos);
  EXPECT_EQ(prompt.find("{movetext}"), std::string::npos);
}

TEST(PromptTest, EmptyGameHasPlaceholderText) {
  const auto task = task_from_moves("p", {});
  EXPECT_NE(build_prompt(task).find("no moves have been played yet"), std::string::npos);
}

TEST(PromptTest, FingerprintIsDeterministicAndTemplateSpecific) {
  const auto task = task_from_moves("p", uci({"d2d4"}));
  const auto ids = template_ids();
  ASSERT_GE(ids.size(), 2u);
  const auto p0 = build_prompt(task, ids[0]);
  EXPECT_EQ(prompt_fingerprint(ids[0], p0), prompt_fingerprint(ids[0], build_prompt(task, ids[0])));
  EXPECT_EQ(prompt_fingerprint(ids[0], p0).size(), 64u);
  EXPECT_NE(prompt_fingerprint(ids[0], p0), prompt_fingerprint(ids[1], build_prompt(task, ids[1])));
  EXPECT_NE(prompt_fingerprint(ids[0], p0), prompt_fingerprint(ids[0], p0 + " "));
}

TEST(PromptTest, UnknownTemplateThrows) {
  const auto task = task_from_moves("p", {});
  EXPECT_THROW(build_prompt(task, "no-such-template"), UnknownTemplate);
  EXPECT_THROW(template_text("no-such-template"), UnknownTemplate);
}

// ---------------------------------------------------------------- prediction parsing

TEST(ParsePredictionTest, BareFen) {
  const auto p = parse_prediction(kInitialFen);
  EXPECT_EQ(p.status, ParseStatus::kOk);
  ASSERT_TRUE(p.state.has_value());
  EXPECT_EQ(*p.state, ChessState::initial());
  EXPECT_EQ(p.fen_text, std::string(kInitialFen));
}

TEST(ParsePredictionTest, NoFen) {
  const auto p = parse_prediction("no idea");
  EXPECT_EQ(p.status, ParseStatus::kNoFenFound);
  EXPECT_FALSE(p.state.has_value());
  EXPECT_FALSE(p.fen_text.has_value());
  EXPECT_EQ(parse_prediction("").status, ParseStatus::kNoFenFound);
}

TEST(ParsePredictionTest, KinglessBoardIsIllegal) {
  const auto p = parse_prediction("rnbq1bnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQ - 0 1");
  EXPECT_EQ(p.status, ParseStatus::kIllegalPosition);
  EXPECT_FALSE(p.state.has_value());
  EXPECT_TRUE(p.fen_text.has_value());
}

TEST(ParsePredictionTest, ProseAndCodeFences) {
  EXPECT_EQ(parse_prediction(std::string("I think the board is: ") + kInitialFen).status, ParseStatus::kOk);
  EXPECT_EQ(parse_prediction(std::string("```\n") + kInitialFen + "\n```").status, ParseStatus::kOk);
  EXPECT_EQ(parse_prediction(std::string("FEN: \"") + kInitialFen + "\".").status, ParseStatus::kOk);
}

TEST(ParsePredictionTest, LastCandidateWins) {
  const auto p = parse_prediction(std::string("Not ") + kInitialFen + " but rather " + kNoB1Knight);
  ASSERT_EQ(p.status, ParseStatus::kOk);
  EXPECT_EQ(chess::format_fen(*p.state), kNoB1Knight);
}

TEST(ParsePredictionTest, MissingCountersDefault) {
  const auto p = parse_prediction("rnbqkbnr/pppppppp/8/8/4P3/8/PPPP1PPP/RNBQKBNR b KQkq e3");
  ASSERT_EQ(p.status, ParseStatus::kOk);
  EXPECT_EQ(p.state->halfmove_clock(), 0);
  EXPECT_EQ(p.state->fullmove_number(), 1);
}

TEST(ParsePredictionTest, PlacementOnlyIsMalformed) {
  EXPECT_EQ(parse_prediction("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR").status, ParseStatus::kMalformedFen);
  EXPECT_EQ(parse_prediction("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBN w KQkq - 0 1").status,
            ParseStatus::kMalformedFen);
}

TEST(ParsePredictionTest, StatusNamesRoundTrip) {
  for (auto s : {ParseStatus::kOk, ParseStatus::kMalformedFen, ParseStatus::kIllegalPosition,
                 ParseStatus::kNoFenFound}) {
    EXPECT_EQ(parse_status_from_string(to_string(s)), s);
  }
  EXPECT_EQ(to_string(ParseStatus::kNoFenFound), "no_fen_found");
  EXPECT_FALSE(parse_status_from_string("bogus").has_value());
}

// ---------------------------------------------------------------- records

TEST(RecordsTest, JsonRoundTrip) {
  const auto task = task_from_moves("rt", uci({"e2e4", "c7c5"}));
  for (const std::string raw : {std::string("I think the board is: ") + kInitialFen, std::string("nothing"),
                                std::string("8/8/8/8/8/8/8/8 w - - 0 1")}) {
    const auto rec = make_record(task, raw, "m", "fp");
    const auto line = record_to_json_line(rec);
    const auto back = record_from_json_line(line);
    EXPECT_EQ(back.task, rec.task);
    EXPECT_EQ(back.raw_response, raw);
    EXPECT_EQ(back.parse_status, rec.parse_status);
    EXPECT_EQ(back.predicted_fen, rec.predicted_fen);
    EXPECT_EQ(back.predicted_state, rec.predicted_state);
    EXPECT_EQ(record_to_json_line(back), line);
    EXPECT_EQ(nlohmann::json::parse(line).size(), 10u);
  }
}

TEST(RecordsTest, RejectsInconsistentLines) {
  const auto task = task_from_moves("bad", uci({"e2e4"}));
  auto json = nlohmann::json::parse(record_to_json_line(make_record(task, kInitialFen, "m", "fp")));
  EXPECT_THROW(record_from_json_line("{not json"), RecordError);
  auto wrong_status = json;
  wrong_status["parse_status"] = "no_fen_found";
  EXPECT_THROW(record_from_json_line(wrong_status.dump()), RecordError);
  auto wrong_truth = json;
  wrong_truth["true_fen"] = kInitialFen;
  EXPECT_THROW(record_from_json_line(wrong_truth.dump()), RecordError);
  auto missing = json;
  missing.erase("model_name");
  EXPECT_THROW(record_from_json_line(missing.dump()), RecordError);
}

TEST(RecordsTest, LoadDeduplicatesAndToleratesMissingFile) {
  TempDir dir;
  EXPECT_TRUE(load_records(dir.path() / "none.jsonl").records.empty());
  const auto task = task_from_moves("dup", uci({"e2e4"}));
  const auto line = record_to_json_line(make_record(task, kInitialFen, "m", "fp"));
  std::ofstream(dir.path() / "r.jsonl") << line << "\n" << line << "\n\n";
  const auto loaded = load_records(dir.path() / "r.jsonl");
  EXPECT_EQ(loaded.records.size(), 1u);
  EXPECT_EQ(loaded.duplicate_lines, 1u);
  ASSERT_EQ(loaded.content_hashes.size(), 1u);
  EXPECT_EQ(loaded.content_hashes[0].size(), 64u);
}

TEST(RecordsTest, TasksRoundTrip) {
  TempDir dir;
  IngestConfig config;
  config.group_lengths = {3, 7};
  config.group_size = 3;
  const auto tasks = ingest_games(random_games(8, 10, 6), config).tasks;
  write_tasks(dir.path() / "t.jsonl", tasks);
  EXPECT_EQ(load_tasks(dir.path() / "t.jsonl"), tasks);
}

// ---------------------------------------------------------------- predict and cache

class CountingPredictor : public Predictor {
 public:
  explicit CountingPredictor(std::string name = "counting") : name_(std::move(name)) {}
  std::string model_name() const override { return name_; }
  std::string complete(const std::string&, const EvalTask& task) override {
    ++calls;
    return chess::format_fen(task.true_state);
  }
  std::atomic<int> calls{0};

 private:
  std::string name_;
};

std::vector<EvalTask> small_task_set() {
  IngestConfig config;
  config.group_lengths = {2, 6};
  config.group_size = 4;
  return ingest_games(random_games(10, 12, 7), config).tasks;
}

TEST(PredictTest, SecondRunIsServedFromCache) {
  TempDir dir;
  const auto path = dir.path() / "records.jsonl";
  const auto tasks = small_task_set();
  CountingPredictor predictor;
  PredictStats stats;
  const auto first = predict_states(tasks, predictor, path, {}, &stats);
  EXPECT_EQ(predictor.calls.load(), static_cast<int>(tasks.size()));
  EXPECT_EQ(stats.queried, tasks.size());
  const auto bytes = read_file(path);

  const auto second = predict_states(tasks, predictor, path, {}, &stats);
  EXPECT_EQ(predictor.calls.load(), static_cast<int>(tasks.size()));
  EXPECT_EQ(stats.cached, tasks.size());
  EXPECT_EQ(stats.queried, 0u);
  EXPECT_EQ(read_file(path), bytes);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(record_to_json_line(first[i]), record_to_json_line(second[i]));
    EXPECT_EQ(first[i].task, tasks[i]);
  }
}

TEST(PredictTest, TemplateOrModelChangeInvalidatesCache) {
  TempDir dir;
  const auto path = dir.path() / "records.jsonl";
  const auto tasks = small_task_set();
  CountingPredictor a("model-a");
  predict_states(tasks, a, path, {});
  PredictOptions other;
  other.template_id = template_ids().back();
  ASSERT_NE(other.template_id, std::string(kDefaultTemplateId));
  predict_states(tasks, a, path, other);
  EXPECT_EQ(a.calls.load(), 2 * static_cast<int>(tasks.size()));
  CountingPredictor b("model-b");
  predict_states(tasks, b, path, {});
  EXPECT_EQ(b.calls.load(), static_cast<int>(tasks.size()));
  EXPECT_EQ(load_records(path).records.size(), 3 * tasks.size());
}

TEST(PredictTest, ResultsIndependentOfConcurrency) {
  TempDir dir;
  const auto tasks = small_task_set();
  CorruptingPredictor p(2, 11);
  PredictOptions serial;
  serial.max_concurrency = 1;
  PredictOptions wide;
  wide.max_concurrency = 8;
  predict_states(tasks, p, dir.path() / "a.jsonl", serial);
  predict_states(tasks, p, dir.path() / "b.jsonl", wide);
  EXPECT_EQ(read_file(dir.path() / "a.jsonl"), read_file(dir.path() / "b.jsonl"));
}

class FlakyPredictor : public Predictor {
 public:
  std::string model_name() const override { return "flaky"; }
  std::string complete(const std::string&, const EvalTask& task) override {
    if (fail && task.truncation_length == 2) throw TransportError("unreachable");
    return chess::format_fen(task.true_state);
  }
  bool fail = true;
};

TEST(PredictTest, TransportFailuresAreNotPersisted) {
  TempDir dir;
  const auto path = dir.path() / "records.jsonl";
  const auto tasks = small_task_set();
  FlakyPredictor p;
  PredictStats stats;
  const auto records = predict_states(tasks, p, path, {}, &stats);
  ASSERT_EQ(records.size(), tasks.size());
  EXPECT_EQ(stats.transport_failures, 4u);
  for (const auto& r : records) EXPECT_EQ(r.transport_failed, r.task.truncation_length == 2);
  EXPECT_EQ(load_records(path).records.size(), tasks.size() - 4);
  p.fail = false;
  predict_states(tasks, p, path, {}, &stats);
  EXPECT_EQ(stats.queried, 4u);
  EXPECT_EQ(load_records(path).records.size(), tasks.size());
}

class RejectingPredictor : public Predictor {
 public:
  std::string model_name() const override { return "rejecting"; }
  std::string complete(const std::string&, const EvalTask&) override { throw AuthError("bad key"); }
};

TEST(PredictTest, AuthErrorAborts) {
  TempDir dir;
  RejectingPredictor p;
  EXPECT_THROW(predict_states(small_task_set(), p, dir.path() / "r.jsonl", {}), AuthError);
}

TEST(MockPredictorTest, Behaviour) {
  const auto task = task_from_moves("mock", uci({"e2e4", "e7e5"}));
  EchoPredictor echo;
  ProseWrapPredictor prose;
  EXPECT_EQ(parse_prediction(echo.complete("", task)).state, task.true_state);
  EXPECT_EQ(parse_prediction(prose.complete("", task)).state, task.true_state);
  EXPECT_NE(prose.complete("", task), echo.complete("", task));
  CorruptingPredictor c(1, 3);
  EXPECT_EQ(c.complete("", task), c.complete("", task));
  EXPECT_NE(c.complete("", task), echo.complete("", task));
  EXPECT_EQ(c.model_name(), "mock-corrupt-1");
}

// ---------------------------------------------------------------- HTTP client

class FakeServer {
 public:
  explicit FakeServer(std::vector<int> statuses) : statuses_(std::move(statuses)) {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
      const std::size_t i = hits_++;
      last_auth_ = req.get_header_value("Authorization");
      last_body_ = req.body;
      const int status = i < statuses_.size() ? statuses_[i] : 200;
      res.status = status;
      if (status == 200) {
        nlohmann::json reply;
        reply["choices"] = nlohmann::json::array({{{"message", {{"role", "assistant"}, {"content", kInitialFen}}}}});
        res.set_content(reply.dump(), "application/json");
      } else {
        res.set_content("{}", "application/json");
      }
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeServer() {
    server_.stop();
    thread_.join();
  }
  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }
  std::size_t hits() const { return hits_.load(); }
  std::string last_auth() const { return last_auth_; }
  std::string last_body() const { return last_body_; }

 private:
  httplib::Server server_;
  std::vector<int> statuses_;
  std::atomic<std::size_t> hits_{0};
  std::string last_auth_;
  std::string last_body_;
  int port_ = 0;
  std::thread thread_;
};

std::unique_ptr<LlmClient> make_client(const FakeServer& server, std::vector<std::chrono::milliseconds>* sleeps) {
  LlmConfig config;
  config.api_base_url = server.base_url();
  config.max_retries = 3;
  config.request_timeout = std::chrono::milliseconds(5000);
  auto client = std::make_unique<LlmClient>(config, "test-key");
  client->set_sleeper([sleeps](std::chrono::milliseconds d) { sleeps->push_back(d); });
  return client;
}

TEST(LlmClientTest, SuccessSendsModelAndKey) {
  FakeServer server({});
  std::vector<std::chrono::milliseconds> sleeps;
  auto client = make_client(server, &sleeps);
  const auto task = task_from_moves("http", {});
  EXPECT_EQ(client->complete("hello", task), kInitialFen);
  EXPECT_EQ(server.last_auth(), "Bearer test-key");
  const auto body = nlohmann::json::parse(server.last_body());
  EXPECT_EQ(body["model"], "gpt-4o");
  EXPECT_EQ(body["temperature"], 0.0);
  EXPECT_EQ(body["messages"][0]["content"], "hello");
  EXPECT_TRUE(sleeps.empty());
}

TEST(LlmClientTest, RetriesRateLimitWithBackoff) {
  FakeServer server({429, 503});
  std::vector<std::chrono::milliseconds> sleeps;
  auto client = make_client(server, &sleeps);
  EXPECT_EQ(client->complete("x", task_from_moves("http", {})), kInitialFen);
  EXPECT_EQ(server.hits(), 3u);
  EXPECT_EQ(client->requests_sent(), 3u);
  ASSERT_EQ(sleeps.size(), 2u);
  EXPECT_EQ(sleeps[1], 2 * sleeps[0]);
}

TEST(LlmClientTest, UnauthorizedIsNotRetried) {
  FakeServer server({401});
  std::vector<std::chrono::milliseconds> sleeps;
  auto client = make_client(server, &sleeps);
  EXPECT_THROW(client->complete("x", task_from_moves("http", {})), AuthError);
  EXPECT_EQ(server.hits(), 1u);
}

TEST(LlmClientTest, GivesUpAfterRetries) {
  FakeServer server({500, 500, 500, 500, 500});
  std::vector<std::chrono::milliseconds> sleeps;
  auto client = make_client(server, &sleeps);
  EXPECT_THROW(client->complete("x", task_from_moves("http", {})), TransportError);
  EXPECT_EQ(server.hits(), 4u);
}

TEST(LlmClientTest, ConnectionRefusedIsTransportError) {
  std::string url;
  {
    FakeServer server({});
    url = server.base_url();
  }
  LlmConfig config;
  config.api_base_url = url;
  config.max_retries = 1;
  config.request_timeout = std::chrono::milliseconds(1000);
  LlmClient client(config, "k");
  client.set_sleeper([](std::chrono::milliseconds) {});
  EXPECT_THROW(client.complete("x", task_from_moves("http", {})), TransportError);
  EXPECT_EQ(client.requests_sent(), 2u);
}

TEST(LlmClientTest, ConfigValidation) {
  LlmConfig config;
  config.max_concurrency = 0;
  EXPECT_THROW(config.validate(), std::invalid_argument);
  config = {};
  config.api_base_url = "no-scheme";
  EXPECT_THROW(config.validate(), std::invalid_argument);
  config = {};
  config.temperature = -1;
  EXPECT_THROW(config.validate(), std::invalid_argument);
}

// ---------------------------------------------------------------- evaluation

EvaluationConfig eval_config(int m) {
  EvaluationConfig c;
  c.estimator.depth_m = m;
  c.estimator.max_frontier = 500;
  c.estimator.seed = 5;
  return c;
}

TEST(EvaluateTest, PerfectPrediction) {
  const auto task = task_from_moves("perfect", uci({"e2e4", "e7e5", "g1f3"}));
  const auto rec = make_record(task, chess::format_fen(task.true_state), "m", "fp");
  const auto e = evaluate_record(rec, eval_config(2));
  EXPECT_TRUE(e.bundle.exact_match);
  EXPECT_EQ(e.bundle.edit_distance, 0u);
  EXPECT_DOUBLE_EQ(e.bundle.edit_kernel, 1.0);
  EXPECT_DOUBLE_EQ(e.bundle.board_accuracy, 1.0);
  EXPECT_DOUBLE_EQ(*e.bundle.precision_m, 1.0);
  EXPECT_DOUBLE_EQ(*e.bundle.recall_m, 1.0);
  EXPECT_EQ(e.affordance_status, "ok");
  EXPECT_EQ(e.record_id, task.record_id());
}

TEST(EvaluateTest, NoFenScoresZero) {
  const auto task = task_from_moves("none", uci({"e2e4"}));
  const auto e = evaluate_record(make_record(task, "I cannot tell", "m", "fp"), eval_config(2));
  EXPECT_FALSE(e.bundle.exact_match);
  EXPECT_EQ(e.bundle.edit_distance, metrics::comparison_text(task.true_state, metrics::ComparisonFields::kFirstFour).size());
  EXPECT_DOUBLE_EQ(e.bundle.board_accuracy, 0.0);
  EXPECT_DOUBLE_EQ(*e.bundle.precision_m, 0.0);
  EXPECT_DOUBLE_EQ(*e.bundle.recall_m, 0.0);
  EXPECT_EQ(e.affordance_status, "invalid_prediction");
  EXPECT_EQ(e.parse_status, ParseStatus::kNoFenFound);
}

TEST(EvaluateTest, IllegalPredictionKeepsBoardAccuracy) {
  const auto task = task_from_moves("kingless", {});
  const auto e = evaluate_record(
      make_record(task, "rnbq1bnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1", "m", "fp"), eval_config(1));
  EXPECT_EQ(e.parse_status, ParseStatus::kIllegalPosition);
  EXPECT_DOUBLE_EQ(e.bundle.board_accuracy, 63.0 / 64.0);
  EXPECT_EQ(e.bundle.edit_distance, 1u);
  EXPECT_DOUBLE_EQ(*e.bundle.precision_m, 0.0);
}

TEST(EvaluateTest, MissingKnightAtDepthOne) {
  const auto task = task_from_moves("knight", {});
  const auto e = evaluate_record(make_record(task, kNoB1Knight, "m", "fp"), eval_config(1));
  // Without the knight, a1b1 is legal and Na3/Nc3 are not: 18 of 19 predicted
  // moves are legal in truth, 18 of 20 true moves in the prediction.
  EXPECT_DOUBLE_EQ(*e.bundle.precision_m, 18.0 / 19.0);
  EXPECT_DOUBLE_EQ(*e.bundle.recall_m, 0.9);
  EXPECT_DOUBLE_EQ(e.bundle.board_accuracy, 63.0 / 64.0);
  EXPECT_FALSE(e.bundle.exact_match);
}

TEST(EvaluateTest, ThreadCountDoesNotChangeResults) {
  IngestConfig ingest;
  ingest.group_lengths = {6, 12};
  ingest.group_size = 6;
  const auto tasks = ingest_games(random_games(14, 20, 8), ingest).tasks;
  CorruptingPredictor predictor(1, 4);
  std::vector<EvalRecord> records;
  for (const auto& t : tasks) records.push_back(make_record(t, predictor.complete("", t), "c", "fp"));
  auto config = eval_config(3);
  config.threads = 1;
  const auto serial = evaluate_records(records, config);
  config.threads = 4;
  EXPECT_EQ(evaluate_records(records, config), serial);
  ASSERT_EQ(serial.size(), tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) EXPECT_EQ(serial[i].record_id, tasks[i].record_id());
}

TEST(EvaluateTest, SkipsTransportFailures) {
  const auto task = task_from_moves("t", {});
  auto failed = make_record(task, "", "m", "fp");
  failed.transport_failed = true;
  const auto ok = make_record(task, kInitialFen, "m", "fp");
  EXPECT_EQ(evaluate_records({failed, ok}, eval_config(1)).size(), 1u);
}

TEST(EvaluateTest, EvaluatedJsonRoundTrip) {
  TempDir dir;
  const auto task = task_from_moves("j", uci({"d2d4"}));
  std::vector<EvaluatedRecord> rows{
      evaluate_record(make_record(task, chess::format_fen(task.true_state), "m", "fp"), eval_config(2)),
      evaluate_record(make_record(task, "garbage", "m", "fp"), eval_config(2)),
  };
  write_evaluated(dir.path() / "e.jsonl", rows);
  EXPECT_EQ(load_evaluated(dir.path() / "e.jsonl"), rows);
}

TEST(EvaluateTest, SeedDependsOnRecordId) {
  EXPECT_EQ(record_seed(1, "a:5"), record_seed(1, "a:5"));
  EXPECT_NE(record_seed(1, "a:5"), record_seed(1, "a:15"));
  EXPECT_NE(record_seed(1, "a:5"), record_seed(2, "a:5"));
}

}  // namespace
}  // namespace statebench::pipeline
