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

#include "statebench/pipeline/predict.hpp"

#include <atomic>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace statebench::pipeline {

std::vector<EvalRecord> predict_states(const std::vector<EvalTask>& tasks, Predictor& predictor,
                                       const std::filesystem::path& cache_path, const PredictOptions& options,
                                       PredictStats* stats) {
  if (options.max_concurrency < 1) throw std::invalid_argument("max_concurrency must be at least 1");
  const std::string model = predictor.model_name();

  // Answers by prompt fingerprint, and which tasks already have a line.
  std::map<std::string, std::string> cache;
  std::set<std::pair<std::string, std::string>> persisted;
  for (auto& r : load_records(cache_path).records) {
    if (r.model_name != model) continue;
    persisted.emplace(r.task.record_id(), r.prompt_fingerprint);
    cache.emplace(r.prompt_fingerprint, std::move(r.raw_response));
  }

  std::vector<std::optional<EvalRecord>> slots(tasks.size());
  std::vector<std::string> prompts(tasks.size());
  std::vector<std::string> fingerprints(tasks.size());
  std::vector<std::size_t> pending;   // need a query
  std::vector<std::size_t> to_write;  // need a line, in task order
  PredictStats local;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    prompts[i] = build_prompt(tasks[i], options.template_id);
    fingerprints[i] = prompt_fingerprint(options.template_id, prompts[i]);
    const auto hit = cache.find(fingerprints[i]);
    if (hit != cache.end()) {
      slots[i] = make_record(tasks[i], hit->second, model, fingerprints[i]);
      ++local.cached;
      if (!persisted.contains({tasks[i].record_id(), fingerprints[i]})) to_write.push_back(i);
    } else {
      pending.push_back(i);
      to_write.push_back(i);
    }
  }

  if (!to_write.empty()) {
    RecordAppender appender(cache_path);
    std::mutex mutex;
    std::condition_variable ready;
    std::vector<bool> done(tasks.size(), false);
    for (std::size_t i = 0; i < tasks.size(); ++i) done[i] = slots[i].has_value();
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::atomic<std::size_t> queried{0};
    std::exception_ptr fatal;

    auto worker = [&] {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= pending.size() || abort.load()) return;
        const std::size_t i = pending[k];
        EvalRecord record;
        try {
          record = make_record(tasks[i], predictor.complete(prompts[i], tasks[i]), model, fingerprints[i]);
          ++queried;
        } catch (const TransportError& e) {
          record.task = tasks[i];
          record.model_name = model;
          record.prompt_fingerprint = fingerprints[i];
          record.transport_failed = true;
          record.transport_error = e.what();
        } catch (...) {
          std::lock_guard lock(mutex);
          if (!fatal) fatal = std::current_exception();
          abort = true;
          ready.notify_all();
          return;
        }
        std::lock_guard lock(mutex);
        slots[i] = std::move(record);
        done[i] = true;
        ready.notify_all();
      }
    };

    std::vector<std::jthread> workers;
    const std::size_t n_workers = std::min(options.max_concurrency, pending.size());
    for (std::size_t w = 0; w < n_workers; ++w) workers.emplace_back(worker);

    // Single appender: write finished records strictly in task order.
    std::size_t cursor = 0;
    {
      std::unique_lock lock(mutex);
      while (cursor < to_write.size()) {
        ready.wait(lock, [&] { return abort.load() || done[to_write[cursor]]; });
        if (abort) break;
        while (cursor < to_write.size() && done[to_write[cursor]]) {
          const EvalRecord& r = *slots[to_write[cursor]];
          if (r.transport_failed) {
            ++local.transport_failures;
          } else {
            appender.append(r);
          }
          ++cursor;
        }
      }
    }
    workers.clear();
    if (fatal) std::rethrow_exception(fatal);
    local.queried = queried.load();
  }

  if (stats != nullptr) *stats = local;
  std::vector<EvalRecord> out;
  out.reserve(tasks.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace statebench::pipeline
