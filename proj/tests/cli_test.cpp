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

// Runs the statebench binary end to end and checks exit codes and outputs.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string output;  // stdout and stderr
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + STATEBENCH_CLI + " " + args + " 2>&1";
  Run r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) r.output += buffer.data();
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("statebench-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const std::string kCorpus = std::string(STATEBENCH_TEST_DATA) + "/random_games.pgn";

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("ingest --out x").code, 1);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("evaluate --records a --out b --estimator sideways").code, 1);
  EXPECT_EQ(run("report --evaluated a --format xml").code, 1);
}

TEST_F(CliTest, Perft) {
  const auto r = run("perft --depth 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.output.find("perft(3) = 8902"), std::string::npos);
  const auto kiwipete =
      run("perft --depth 2 --fen 'r3k2r/p1ppqpb1/bn2pnp1/3PN3/1p2P3/2N2Q1p/PPPBBPPP/R3K2R w KQkq - 0 1'");
  EXPECT_EQ(kiwipete.code, 0);
  EXPECT_NE(kiwipete.output.find("perft(2) = 2039"), std::string::npos);
  EXPECT_EQ(run("perft --fen 'not a fen'").code, 2);
}

TEST_F(CliTest, MockPipelineEndToEnd) {
  const auto ingest = run("ingest --pgn " + kCorpus + " --group-lengths 5,15 --group-size 6 --seed 3 --out " +
                          path("tasks.jsonl"));
  ASSERT_EQ(ingest.code, 0) << ingest.output;
  EXPECT_NE(ingest.output.find("group 15 plies (7.5 moves): 6 tasks"), std::string::npos) << ingest.output;

  const std::string predict = "predict --tasks " + path("tasks.jsonl") + " --out " + path("records.jsonl") +
                              " --mock echo";
  const auto first = run(predict);
  ASSERT_EQ(first.code, 0) << first.output;
  EXPECT_NE(first.output.find("12 queried"), std::string::npos) << first.output;
  const auto bytes = slurp(path("records.jsonl"));
  const auto second = run(predict);
  ASSERT_EQ(second.code, 0);
  EXPECT_NE(second.output.find("12 cached, 0 queried"), std::string::npos) << second.output;
  EXPECT_EQ(slurp(path("records.jsonl")), bytes);

  const auto evaluate = run("evaluate --records " + path("records.jsonl") + " --out " + path("eval.jsonl") +
                            " --depth 2 --samples 100 --threads 2");
  ASSERT_EQ(evaluate.code, 0) << evaluate.output;

  const auto report = run("report --evaluated " + path("eval.jsonl"));
  ASSERT_EQ(report.code, 0) << report.output;
  EXPECT_EQ(report.output.rfind("group_label,n_records,", 0), 0u) << report.output;
  EXPECT_NE(report.output.find("\nall,12,1,0,1,1,1,1,0,NA\n"), std::string::npos) << report.output;

  const auto json = run("report --evaluated " + path("eval.jsonl") + " --format json --per-record --out " +
                        path("summary.json"));
  ASSERT_EQ(json.code, 0) << json.output;
  EXPECT_TRUE(fs::exists(path("summary.json")));
  EXPECT_TRUE(fs::exists(path("summary.records.json")));
}

TEST_F(CliTest, DataErrors) {
  EXPECT_EQ(run("ingest --pgn " + path("nope.pgn") + " --out " + path("t.jsonl")).code, 2);
  std::ofstream(path("bad.jsonl")) << "{\"not\": \"a record\"}\n";
  const auto r = run("evaluate --records " + path("bad.jsonl") + " --out " + path("e.jsonl"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.output.find("bad.jsonl:1"), std::string::npos) << r.output;
}

TEST_F(CliTest, NetworkErrors) {
  ASSERT_EQ(run("ingest --pgn " + kCorpus + " --group-lengths 5 --group-size 2 --out " + path("t.jsonl")).code, 0);
  const std::string predict = "predict --tasks " + path("t.jsonl") + " --out " + path("r.jsonl");
  EXPECT_EQ(run(predict, "env -u LLM_API_KEY").code, 3);
  // Nothing listens on port 9 of the loopback interface.
  const auto refused =
      run(predict + " --api-base http://127.0.0.1:9/v1 --max-retries 0 --timeout 2", "env LLM_API_KEY=k");
  EXPECT_EQ(refused.code, 3) << refused.output;
  EXPECT_EQ(slurp(path("r.jsonl")), "");
}

}  // namespace
