// Copyright 2026 The starapolar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "starapolar/sweep.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

namespace starapolar {

std::vector<Triple> sweep_cells(const SweepOptions& o) {
  if (o.dmin < 1 || o.dmax < o.dmin) throw DomainError("need 1 <= dmin <= dmax");
  if (o.n < 1) throw DomainError("need n >= 1");
  std::vector<Triple> cells;
  for (int d = o.dmin; d <= o.dmax; ++d) {
    if (o.mode == SweepMode::Conjecture) {
      cells.push_back({d, d + 1, o.n});
    } else {
      for (int r = o.n; r <= d + o.n; ++r) cells.push_back({d, r, o.n});
    }
  }
  return cells;
}

std::vector<SweepRecord> read_sweep_log(const std::string& path, std::size_t* bad_lines) {
  std::vector<SweepRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::size_t bad = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    try {
      out.push_back(sweep_record_from_json(Json::parse(line)));
    } catch (const std::exception&) {
      ++bad;
    }
  }
  if (bad_lines) *bad_lines = bad;
  return out;
}

namespace {

using CellKey = std::tuple<int, int, int, std::uint64_t, std::uint64_t, unsigned>;

CellKey key_of(const Triple& t, SweepMode mode, const JacobianTestOptions& j) {
  if (mode == SweepMode::Classify) return {t.d, t.r, t.n, 0, 0, 0};
  return {t.d, t.r, t.n, j.prime, j.seed, j.trials};
}

bool ends_without_newline(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in || in.tellg() == 0) return false;
  in.seekg(-1, std::ios::end);
  char c = 0;
  in.get(c);
  return c != '\n';
}

}  // namespace

SweepSummary run_sweep(const SweepOptions& options, std::ostream& err) {
  const auto cells = sweep_cells(options);
  const SweepSource source = options.mode == SweepMode::Conjecture ? SweepSource::Jactest : SweepSource::Classify;

  std::set<CellKey> done;
  if (!options.force) {
    for (const auto& rec : read_sweep_log(options.out)) {
      if (rec.source != source) continue;
      if (source == SweepSource::Jactest) {
        if (!rec.report) continue;
        done.insert({rec.triple.d, rec.triple.r, rec.triple.n, rec.report->prime, rec.report->seed,
                     rec.report->trials});
      } else {
        done.insert(key_of(rec.triple, options.mode, options.jactest));
      }
    }
  }

  // A crash mid-write can leave a partial last line; keep it on its own line.
  const bool repair = ends_without_newline(options.out);
  std::ofstream log(options.out, std::ios::app);
  if (!log) throw Error("cannot open '" + options.out + "' for appending");
  if (repair) log << '\n' << std::flush;

  SweepSummary summary;
  std::vector<Triple> todo;
  for (const auto& t : cells) {
    if (done.count(key_of(t, options.mode, options.jactest)))
      ++summary.skipped;
    else
      todo.push_back(t);
  }

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      SweepRecord rec{todo[i], source, std::nullopt, std::nullopt, {}, tool_version()};
      std::string failure;
      try {
        if (source == SweepSource::Jactest)
          rec.report = jacobian_rank_test(todo[i], options.jactest);
        else
          rec.classification = classify(todo[i]);
      } catch (const std::exception& e) {
        failure = e.what();
      }
      rec.timestamp = utc_timestamp();
      const std::lock_guard lock(mu);
      if (!failure.empty()) {
        err << "sweep: " << to_string(todo[i]) << ": " << failure << '\n';
        ++summary.failed;
        continue;
      }
      // One write and flush per record keeps every completed line whole.
      log << to_json(rec).dump() + "\n" << std::flush;
      if (!log) {
        err << "sweep: write to '" << options.out << "' failed\n";
        ++summary.failed;
        continue;
      }
      ++summary.written;
      summary.records.push_back(std::move(rec));
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }
  return summary;
}

}  // namespace starapolar
