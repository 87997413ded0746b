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

#ifndef STARAPOLAR_SWEEP_HPP
#define STARAPOLAR_SWEEP_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "starapolar/io.hpp"

namespace starapolar {

enum class SweepMode {
  Conjecture,  // jactest on (d, d+1, n)
  Classify,    // classify every (d, r, n) with n <= r <= d+n
};

struct SweepOptions {
  int n = 2;
  int dmin = 3;
  int dmax = 7;
  SweepMode mode = SweepMode::Conjecture;
  std::string out;
  bool force = false;
  unsigned jobs = 1;
  JacobianTestOptions jactest;
};

struct SweepSummary {
  std::size_t written = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  std::vector<SweepRecord> records;  // written this run, in completion order
};

std::vector<Triple> sweep_cells(const SweepOptions& options);

// Reads every well-formed record of a JSON-lines file; malformed lines are
// counted in *bad_lines and otherwise ignored.
std::vector<SweepRecord> read_sweep_log(const std::string& path, std::size_t* bad_lines = nullptr);

// Appends one record per computed cell. Cells already present with the same
// source, prime, seed and trials are skipped unless options.force is set.
// Throws Error when the output cannot be opened; per-cell failures are
// reported on err and counted.
SweepSummary run_sweep(const SweepOptions& options, std::ostream& err);

}  // namespace starapolar

#endif  // STARAPOLAR_SWEEP_HPP
