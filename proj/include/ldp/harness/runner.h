// Copyright 2026 The ldp-erm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Experiment orchestration: builds one dataset per (n, p), runs every sweep
// cell x trial on a worker pool, and writes the reports and the manifest.
//
// Output directory layout:
//   report.csv               one row per cell x trial (ReportColumns())
//   <mechanism>_report.csv   bernstein, onebit, hinge, general-linear only
//   transcript_summary.csv   message and bit counts per trial
//   avg_bench_slope.csv      avg-bench only: log-log slope of median error
//   releases/, answers/      marginals and smooth-queries, trial 0 per cell
//   manifest.json            the normalized config plus run metadata
// All CSV output depends only on the config, never on the worker count.

#ifndef LDP_HARNESS_RUNNER_H_
#define LDP_HARNESS_RUNNER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/harness/config.h"
#include "ldp/harness/report.h"

namespace ldp::harness {

struct RunOptions {
  std::string out_dir = "ldp-erm-out";
  int workers = 1;
};

struct RunSummary {
  std::size_t cells = 0;
  std::size_t trials_run = 0;
  std::size_t failures = 0;
  std::vector<ReportRow> rows;
  // avg-bench only.
  std::vector<ReportRow> slopes;
};

// Checks every cell's parameters without running anything.
absl::Status ValidateConfig(const ExperimentConfig& config);

// Errors are configuration or I/O problems; failed trials are counted in
// RunSummary::failures and recorded in their report rows.
absl::StatusOr<RunSummary> RunExperiment(const ExperimentConfig& config,
                                         const RunOptions& options);

// Worker default: LDP_ERM_WORKERS when set and positive, else the number
// of hardware threads.
int DefaultWorkers();

// `git describe` of the build tree, or "unknown".
const char* GitDescribe();

}  // namespace ldp::harness

#endif  // LDP_HARNESS_RUNNER_H_
