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


// Experiment configuration. A config is a JSON object:
//   {"mechanism": "...", "seed": 1, "trials": 20,
//    "dataset": {"family": "...", ...},
//    "sweep": {"n": [...], "epsilon": [...], ...},
//    "params": {...}}
// Any sweepable parameter may appear in "params" as a scalar or in "sweep"
// as a list; the sweep grid is the Cartesian product of the lists.

#ifndef LDP_HARNESS_CONFIG_H_
#define LDP_HARNESS_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"

namespace ldp::harness {

enum class Mechanism {
  kBernstein,
  kOneBit,
  kHinge,
  kGeneralLinear,
  kMarginals,
  kSmoothQueries,
  kAvgBench,
};

std::string_view MechanismName(Mechanism m);
absl::StatusOr<Mechanism> ParseMechanism(std::string_view name);

// Sweepable parameters in the order cells are enumerated (first slowest).
const std::vector<std::string>& SweepKeys();

struct DatasetSpec {
  std::string family;  // empty: the mechanism's default family
  std::string path;    // CSV file instead of a synthetic family
  double margin = 0.2;       // separable-two-class
  double q = 0.3;            // bernoulli-bits
  double std_dev = 0.5;      // gaussian-ball-clipped
  double label_noise = 0.0;  // gaussian-ball-clipped
};

// One point of the sweep grid.
using Cell = std::map<std::string, double>;

struct ExperimentConfig {
  Mechanism mechanism = Mechanism::kAvgBench;
  std::uint64_t seed = 1;
  int trials = 20;
  DatasetSpec dataset;
  std::map<std::string, std::vector<double>> sweep;
  nlohmann::json params = nlohmann::json::object();

  // Every grid cell; empty when any sweep list is empty.
  std::vector<Cell> Cells() const;

  // Cell value, then params, then `fallback`.
  double Number(const Cell& cell, const std::string& key, double fallback) const;
  std::string String(const std::string& key, const std::string& fallback) const;
  bool Bool(const std::string& key, bool fallback) const;
  std::vector<double> List(const std::string& key,
                           std::vector<double> fallback) const;

  // Normalized JSON; parsing it back gives an identical config.
  nlohmann::json ToJson() const;
};

// Parses and validates. `mechanism_override` (from the command line) wins
// over the file's "mechanism". Unknown keys are errors.
absl::StatusOr<ExperimentConfig> ParseConfig(
    const nlohmann::json& doc,
    std::optional<std::string_view> mechanism_override = std::nullopt);
absl::StatusOr<ExperimentConfig> LoadConfig(
    const std::string& path,
    std::optional<std::string_view> mechanism_override = std::nullopt);

}  // namespace ldp::harness

#endif  // LDP_HARNESS_CONFIG_H_
