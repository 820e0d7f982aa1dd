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


// ldp-erm <mechanism> --config <path> [--out <dir>] [--seed <u64>]
//         [--trials <n>] [--workers <n>]
//
// Exit codes: 0 success, 1 I/O failure, 2 configuration error, 3 some trials
// failed (recorded in report.csv).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ldp/harness/config.h"
#include "ldp/harness/runner.h"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPartial = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally private ERM and query-release experiments"};
  std::string mechanism;
  std::string config_path;
  std::string out_dir = "ldp-erm-out";
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  int workers = ldp::harness::DefaultWorkers();
  app.add_option("mechanism", mechanism,
                 "bernstein | onebit | hinge | general-linear | marginals | "
                 "smooth-queries | avg-bench")
      ->required();
  app.add_option("--config", config_path, "JSON experiment config (a manifest.json works too)")
      ->required();
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--seed", seed, "master seed (overrides the config)");
  app.add_option("--trials", trials, "trials per cell (overrides the config)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--workers", workers, "worker threads (default: LDP_ERM_WORKERS or all cores)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  auto config = ldp::harness::LoadConfig(config_path, mechanism);
  if (!config.ok()) {
    std::cerr << "config error: " << config.status().message() << "\n";
    return kExitConfig;
  }
  if (seed.has_value()) config->seed = *seed;
  if (trials.has_value()) config->trials = *trials;
  if (const absl::Status valid = ldp::harness::ValidateConfig(*config); !valid.ok()) {
    std::cerr << "config error: " << valid.message() << "\n";
    return kExitConfig;
  }

  ldp::harness::RunOptions options;
  options.out_dir = out_dir;
  options.workers = workers;
  auto summary = ldp::harness::RunExperiment(*config, options);
  if (!summary.ok()) {
    const bool config_problem =
        summary.status().code() == absl::StatusCode::kInvalidArgument ||
        summary.status().code() == absl::StatusCode::kResourceExhausted ||
        summary.status().code() == absl::StatusCode::kFailedPrecondition;
    std::cerr << (config_problem ? "config error: " : "error: ")
              << summary.status().message() << "\n";
    return config_problem ? kExitConfig : kExitIo;
  }
  std::cout << summary->cells << " cells, " << summary->trials_run << " trials, "
            << summary->failures << " failed; reports in " << out_dir << "\n";
  return summary->failures > 0 ? kExitPartial : 0;
}
