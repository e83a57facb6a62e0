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

// statebench: corpus ingestion, prediction, evaluation and reporting for
// chess state-tracking experiments.

#include <CLI11.hpp>
#include <fmt/core.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "statebench/chess/fen.hpp"
#include "statebench/chess/movegen.hpp"
#include "statebench/pipeline/corpus.hpp"
#include "statebench/pipeline/evaluate.hpp"
#include "statebench/pipeline/llm_client.hpp"
#include "statebench/pipeline/mock_predictor.hpp"
#include "statebench/pipeline/predict.hpp"
#include "statebench/pipeline/records.hpp"
#include "statebench/report/emit.hpp"
#include "statebench/report/studies.hpp"
#include "statebench/report/summary.hpp"

namespace {

using namespace statebench;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNetwork = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  // shared
  std::uint64_t seed = 0;
  std::string out;
  std::vector<int> group_lengths = pipeline::kDefaultGroupLengths;
  // ingest
  std::string pgn;
  std::size_t group_size = 2000;
  // predict
  std::string tasks;
  std::string mock;
  int corruptions = 1;
  std::string model = pipeline::LlmConfig{}.model_name;
  std::string api_base = pipeline::LlmConfig{}.api_base_url;
  std::size_t concurrency = 4;
  std::string template_id = std::string(pipeline::kDefaultTemplateId);
  double temperature = 0.0;
  int max_retries = 5;
  double timeout_s = 60.0;
  // evaluate
  std::string records;
  int depth = 4;
  std::size_t samples = 500;
  std::string estimator = "intermediate";
  std::string resampling = "weight";
  double lambda = 0.1;
  std::string fields = "first-four";
  std::size_t threads = 1;
  // report
  std::string evaluated;
  std::string format = "csv";
  bool per_record = false;
  // validate
  std::string out_dir = ".";
  int runs = 50;
  int max_depth = 8;
  // perft
  std::string fen = std::string(chess::kInitialFen);
  bool parallel = false;
};

std::string plies_and_moves(int plies) { return fmt::format("{} plies ({:g} moves)", plies, plies / 2.0); }

int run_ingest(const Options& o) {
  pipeline::IngestConfig config;
  config.group_lengths = o.group_lengths;
  config.group_size = o.group_size;
  config.seed = o.seed;
  const auto result = pipeline::ingest_corpus(o.pgn, config);
  for (const auto& issue : result.issues) {
    fmt::print(stderr, "warning: skipped game {} ({}): {}\n", issue.game_index, issue.game_id, issue.message);
  }
  pipeline::write_tasks(o.out, result.tasks);
  for (int length : o.group_lengths) {
    std::size_t n = 0;
    for (const auto& t : result.tasks) n += t.group_label == length ? 1 : 0;
    fmt::print("group {}: {} tasks\n", plies_and_moves(length), n);
  }
  for (const auto& s : result.shortfalls) {
    fmt::print(stderr, "warning: group {} filled {} of {} (not enough games longer than the cut)\n",
               plies_and_moves(s.group_label), s.filled, s.requested);
  }
  fmt::print("wrote {} tasks to {}\n", result.tasks.size(), o.out);
  return kExitOk;
}

std::unique_ptr<pipeline::Predictor> make_predictor(const Options& o) {
  if (o.mock == "echo") return std::make_unique<pipeline::EchoPredictor>();
  if (o.mock == "prose") return std::make_unique<pipeline::ProseWrapPredictor>();
  if (o.mock == "corrupt") return std::make_unique<pipeline::CorruptingPredictor>(o.corruptions, o.seed);
  if (!o.mock.empty()) throw UsageError("unknown mock predictor: " + o.mock);
  pipeline::LlmConfig config;
  config.api_base_url = o.api_base;
  config.model_name = o.model;
  config.temperature = o.temperature;
  config.max_retries = o.max_retries;
  config.request_timeout = std::chrono::milliseconds(static_cast<long long>(o.timeout_s * 1000));
  config.max_concurrency = o.concurrency;
  config.prompt_template_id = o.template_id;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return pipeline::LlmClient::from_environment(config);
}

int run_predict(const Options& o) {
  try {
    pipeline::template_text(o.template_id);
  } catch (const pipeline::UnknownTemplate& e) {
    throw UsageError(e.what());
  }
  if (o.concurrency < 1) throw UsageError("--concurrency must be at least 1");
  const auto tasks = pipeline::load_tasks(o.tasks);
  auto predictor = make_predictor(o);
  pipeline::PredictOptions options;
  options.template_id = o.template_id;
  options.max_concurrency = o.concurrency;
  pipeline::PredictStats stats;
  const auto records = pipeline::predict_states(tasks, *predictor, o.out, options, &stats);
  std::size_t ok = 0;
  for (const auto& r : records) ok += !r.transport_failed && r.parse_status == pipeline::ParseStatus::kOk ? 1 : 0;
  fmt::print("{} records ({} cached, {} queried, {} failed); {} parsed ok\n", records.size(), stats.cached,
             stats.queried, stats.transport_failures, ok);
  if (stats.transport_failures > 0) {
    fmt::print(stderr, "error: {} requests failed after retries; rerun to fill them in\n", stats.transport_failures);
    return kExitNetwork;
  }
  return kExitOk;
}

pipeline::EvaluationConfig evaluation_config(const Options& o) {
  pipeline::EvaluationConfig c;
  c.metric.kernel_lambda = o.lambda;
  if (o.fields == "first-four") {
    c.metric.fields = metrics::ComparisonFields::kFirstFour;
  } else if (o.fields == "full") {
    c.metric.fields = metrics::ComparisonFields::kFullFen;
  } else {
    throw UsageError("--fields must be first-four or full");
  }
  c.estimator.depth_m = o.depth;
  c.estimator.max_frontier = o.samples;
  c.estimator.seed = o.seed;
  if (o.estimator == "naive") {
    c.estimator.kind = estimators::EstimatorKind::kNaive;
  } else if (o.estimator == "intermediate") {
    c.estimator.kind = estimators::EstimatorKind::kIntermediate;
  } else {
    throw UsageError("--estimator must be naive or intermediate");
  }
  if (o.resampling == "weight") {
    c.estimator.resampling = estimators::Resampling::kWeightProportional;
  } else if (o.resampling == "uniform") {
    c.estimator.resampling = estimators::Resampling::kUniformRescale;
  } else {
    throw UsageError("--resampling must be weight or uniform");
  }
  c.threads = o.threads;
  try {
    c.metric.validate();
    c.estimator.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

int run_evaluate(const Options& o) {
  const auto config = evaluation_config(o);
  const auto loaded = pipeline::load_records(o.records);
  if (loaded.duplicate_lines > 0) fmt::print(stderr, "note: ignored {} duplicate lines\n", loaded.duplicate_lines);
  const auto evaluated = pipeline::evaluate_records(loaded.records, config);
  pipeline::write_evaluated(o.out, evaluated);
  fmt::print("evaluated {} records into {}\n", evaluated.size(), o.out);
  return kExitOk;
}

int run_report(const Options& o, bool lengths_given) {
  report::ReportConfig config;
  if (o.format == "csv") {
    config.output_format = report::ReportFormat::kCsv;
  } else if (o.format == "json") {
    config.output_format = report::ReportFormat::kJson;
  } else {
    throw UsageError("--format must be csv or json");
  }
  const auto evaluated = pipeline::load_evaluated(o.evaluated);
  const auto summary =
      report::summarize_groups(evaluated, lengths_given ? o.group_lengths : std::vector<int>{});
  if (summary.empty_groups_omitted > 0) {
    fmt::print(stderr, "warning: {} expected groups had no records\n", summary.empty_groups_omitted);
  }
  if (o.out.empty()) {
    if (o.per_record) throw UsageError("--per-record needs --out");
    std::cout << (config.output_format == report::ReportFormat::kCsv ? report::summaries_to_csv(summary.rows)
                                                                     : report::summaries_to_json(summary.rows));
    return kExitOk;
  }
  config.output_path = o.out;
  config.include_per_record = o.per_record;
  report::emit_report(summary.rows, evaluated, config);
  fmt::print("wrote {}\n", o.out);
  return kExitOk;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw report::IoError("cannot write " + path.string());
  out << text;
}

int run_validate(const Options& o) {
  if (o.runs < 2) throw UsageError("--runs must be at least 2");
  std::filesystem::create_directories(o.out_dir);
  report::TreeStudyConfig tree;
  tree.runs = o.runs;
  tree.max_depth = o.max_depth;
  tree.max_frontier = o.samples;
  tree.seed = o.seed;
  const auto tree_rows = report::homogeneous_tree_study(tree);
  const auto tree_path = std::filesystem::path(o.out_dir) / "tree_study.csv";
  write_text(tree_path, report::tree_study_to_csv(tree_rows));

  const auto pair = report::find_divergent_pair(o.seed);
  report::VarianceStudyConfig variance;
  variance.runs = o.runs;
  variance.seed = o.seed;
  variance.depth_sweep_n = o.samples;
  const auto points = report::variance_study(pair, variance);
  const auto variance_path = std::filesystem::path(o.out_dir) / "variance_study.csv";
  write_text(variance_path, report::variance_study_to_csv(points));

  fmt::print("state pair (edit distance {}):\n  true      {}\n  predicted {}\n", pair.edit_distance,
             chess::format_fen(pair.truth), chess::format_fen(pair.predicted));
  fmt::print("wrote {} and {}\n", tree_path.string(), variance_path.string());
  return kExitOk;
}

int run_perft(const Options& o, bool fen_given) {
  const auto state = chess::parse_fen(o.fen);
  static constexpr std::uint64_t kInitial[] = {1, 20, 400, 8902, 197281, 4865609, 119060324};
  bool mismatch = false;
  for (int d = 1; d <= o.depth; ++d) {
    const auto start = std::chrono::steady_clock::now();
    const auto n = chess::perft(state, d, o.parallel);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string check;
    if (!fen_given && d < 7) {
      check = n == kInitial[d] ? "  ok" : fmt::format("  MISMATCH (expected {})", kInitial[d]);
      mismatch = mismatch || n != kInitial[d];
    }
    fmt::print("perft({}) = {}  [{:.3f}s]{}\n", d, n, s, check);
  }
  return mismatch ? kExitData : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chess state-tracking benchmark: ingest, predict, evaluate, report."};
  app.require_subcommand(1);
  Options o;

  auto* ingest = app.add_subcommand("ingest", "Cut PGN games into length-grouped tasks");
  ingest->add_option("--pgn", o.pgn, "PGN file or directory of .pgn files")->required();
  ingest->add_option("--group-lengths", o.group_lengths, "Truncation lengths in plies")->delimiter(',');
  ingest->add_option("--group-size", o.group_size, "Tasks per group");
  ingest->add_option("--seed", o.seed, "Selection seed");
  ingest->add_option("--out", o.out, "Tasks file (JSON lines)")->required();

  auto* predict = app.add_subcommand("predict", "Ask a model for the FEN of each task");
  predict->add_option("--tasks", o.tasks, "Tasks file")->required();
  predict->add_option("--out", o.out, "Records file; also the answer cache")->required();
  predict->add_option("--mock", o.mock, "Offline predictor: echo, prose or corrupt");
  predict->add_option("--corruptions", o.corruptions, "Piece perturbations for --mock corrupt");
  predict->add_option("--seed", o.seed, "Seed for --mock corrupt");
  predict->add_option("--model", o.model, "Model name");
  predict->add_option("--api-base", o.api_base, "Chat-completions base URL");
  predict->add_option("--concurrency", o.concurrency, "Parallel requests");
  predict->add_option("--template", o.template_id, "Prompt template id");
  predict->add_option("--temperature", o.temperature, "Sampling temperature");
  predict->add_option("--max-retries", o.max_retries, "Retries for 429, 5xx and connection errors");
  predict->add_option("--timeout", o.timeout_s, "Per-request timeout in seconds");

  auto* evaluate = app.add_subcommand("evaluate", "Score prediction records");
  evaluate->add_option("--records", o.records, "Records file")->required();
  evaluate->add_option("--out", o.out, "Evaluated records file (JSON lines)")->required();
  evaluate->add_option("--depth", o.depth, "Sequence length m");
  evaluate->add_option("--samples", o.samples, "Frontier size N");
  evaluate->add_option("--estimator", o.estimator, "naive or intermediate");
  evaluate->add_option("--resampling", o.resampling, "weight or uniform");
  evaluate->add_option("--seed", o.seed, "Base seed");
  evaluate->add_option("--lambda", o.lambda, "Edit-distance kernel rate");
  evaluate->add_option("--fields", o.fields, "FEN fields compared: first-four or full");
  evaluate->add_option("--threads", o.threads, "Worker threads");

  auto* rep = app.add_subcommand("report", "Summarize evaluated records by group");
  rep->add_option("--evaluated", o.evaluated, "Evaluated records file")->required();
  rep->add_option("--format", o.format, "csv or json");
  rep->add_option("--out", o.out, "Output file (stdout when omitted)");
  rep->add_flag("--per-record", o.per_record, "Also write per-record scores");
  auto* rep_lengths =
      rep->add_option("--group-lengths", o.group_lengths, "Expected groups, to flag empty ones")->delimiter(',');

  auto* validate = app.add_subcommand("validate", "Run the estimator studies and write their CSVs");
  validate->add_option("--out-dir", o.out_dir, "Output directory");
  validate->add_option("--seed", o.seed, "Base seed");
  validate->add_option("--runs", o.runs, "Repetitions per setting");
  validate->add_option("--samples", o.samples, "Frontier size N");
  validate->add_option("--depth", o.max_depth, "Largest m for the tree study");

  auto* perft = app.add_subcommand("perft", "Move generator self-check");
  auto* fen_opt = perft->add_option("--fen", o.fen, "Start position (default: initial)");
  perft->add_option("--depth", o.depth, "Maximum depth")->check(CLI::Range(1, 10));
  perft->add_flag("--parallel", o.parallel, "Split the first ply across threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest) return run_ingest(o);
    if (*predict) return run_predict(o);
    if (*evaluate) return run_evaluate(o);
    if (*rep) return run_report(o, rep_lengths->count() > 0);
    if (*validate) return run_validate(o);
    if (*perft) return run_perft(o, fen_opt->count() > 0);
  } catch (const UsageError& e) {
    fmt::print(stderr, "usage error: {}\n", e.what());
    return kExitUsage;
  } catch (const pipeline::AuthError& e) {
    fmt::print(stderr, "network error: {}\n", e.what());
    return kExitNetwork;
  } catch (const pipeline::TransportError& e) {
    fmt::print(stderr, "network error: {}\n", e.what());
    return kExitNetwork;
  } catch (const std::exception& e) {
    fmt::print(stderr, "data error: {}\n", e.what());
    return kExitData;
  }
  return kExitUsage;
}
