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


#include "ldp/harness/config.h"

#include <fstream>
#include <set>

#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "ldp/base/status_macros.h"

namespace ldp::harness {
namespace {

using nlohmann::json;

constexpr std::pair<Mechanism, std::string_view> kNames[] = {
    {Mechanism::kBernstein, "bernstein"},
    {Mechanism::kOneBit, "onebit"},
    {Mechanism::kHinge, "hinge"},
    {Mechanism::kGeneralLinear, "general-linear"},
    {Mechanism::kMarginals, "marginals"},
    {Mechanism::kSmoothQueries, "smooth-queries"},
    {Mechanism::kAvgBench, "avg-bench"},
};

const std::set<std::string>& AllowedParams(Mechanism m) {
  static const auto* const kCube = new std::set<std::string>{
      "n", "p", "epsilon", "k", "h", "beta", "loss", "constraint", "radius",
      "grid_cap"};
  static const auto* const kGlm = new std::set<std::string>{
      "n", "p", "epsilon", "delta", "d", "alpha", "beta", "loss",
      "q_sampling", "iterations", "radius", "add_noise", "sigma",
      "sigma_samples", "baseline_iterations"};
  static const auto* const kMarginals = new std::set<std::string>{
      "n", "p", "epsilon", "k", "gamma", "encoding", "mode", "beta",
      "max_dimension"};
  static const auto* const kSmooth = new std::set<std::string>{
      "n", "p", "epsilon", "t", "mode", "beta", "widths", "center",
      "max_dimension"};
  static const auto* const kAvg =
      new std::set<std::string>{"n", "epsilon", "bound"};
  switch (m) {
    case Mechanism::kBernstein:
    case Mechanism::kOneBit:
      return *kCube;
    case Mechanism::kHinge:
    case Mechanism::kGeneralLinear:
      return *kGlm;
    case Mechanism::kMarginals:
      return *kMarginals;
    case Mechanism::kSmoothQueries:
      return *kSmooth;
    case Mechanism::kAvgBench:
      return *kAvg;
  }
  return *kAvg;
}

absl::Status CheckKeys(const json& obj, const std::set<std::string>& allowed,
                       std::string_view where) {
  if (!obj.is_object()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("'%s' must be an object", std::string(where)));
  }
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "unknown key '%s' in %s (allowed: %s)", key, std::string(where),
          absl::StrJoin(allowed, ", ")));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<double> NumberField(const json& obj, const char* key,
                                   double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("'%s' must be a number", key));
  }
  return obj.at(key).get<double>();
}

}  // namespace

std::string_view MechanismName(Mechanism m) {
  for (const auto& [mech, name] : kNames) {
    if (mech == m) return name;
  }
  return "?";
}

absl::StatusOr<Mechanism> ParseMechanism(std::string_view name) {
  for (const auto& [mech, n] : kNames) {
    if (n == name) return mech;
  }
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown mechanism '%s' (bernstein|onebit|hinge|general-linear|"
      "marginals|smooth-queries|avg-bench)",
      std::string(name)));
}

const std::vector<std::string>& SweepKeys() {
  static const auto* const kKeys = new std::vector<std::string>{
      "n", "p", "epsilon", "delta", "k", "h", "d", "t", "alpha", "beta",
      "gamma"};
  return *kKeys;
}

std::vector<Cell> ExperimentConfig::Cells() const {
  std::vector<Cell> cells = {Cell{}};
  for (const std::string& key : SweepKeys()) {
    auto it = sweep.find(key);
    if (it == sweep.end()) continue;
    std::vector<Cell> next;
    for (const Cell& base : cells) {
      for (double v : it->second) {
        Cell c = base;
        c[key] = v;
        next.push_back(std::move(c));
      }
    }
    cells = std::move(next);
  }
  return cells;
}

double ExperimentConfig::Number(const Cell& cell, const std::string& key,
                                double fallback) const {
  if (auto it = cell.find(key); it != cell.end()) return it->second;
  if (params.contains(key) && params.at(key).is_number()) {
    return params.at(key).get<double>();
  }
  return fallback;
}

std::string ExperimentConfig::String(const std::string& key,
                                     const std::string& fallback) const {
  if (params.contains(key) && params.at(key).is_string()) {
    return params.at(key).get<std::string>();
  }
  return fallback;
}

bool ExperimentConfig::Bool(const std::string& key, bool fallback) const {
  if (params.contains(key) && params.at(key).is_boolean()) {
    return params.at(key).get<bool>();
  }
  return fallback;
}

std::vector<double> ExperimentConfig::List(const std::string& key,
                                           std::vector<double> fallback) const {
  if (params.contains(key) && params.at(key).is_array()) {
    return params.at(key).get<std::vector<double>>();
  }
  return fallback;
}

json ExperimentConfig::ToJson() const {
  json doc;
  doc["mechanism"] = std::string(MechanismName(mechanism));
  doc["seed"] = seed;
  doc["trials"] = trials;
  json ds = json::object();
  if (!dataset.family.empty()) ds["family"] = dataset.family;
  if (!dataset.path.empty()) ds["path"] = dataset.path;
  ds["margin"] = dataset.margin;
  ds["q"] = dataset.q;
  ds["std"] = dataset.std_dev;
  ds["label_noise"] = dataset.label_noise;
  doc["dataset"] = ds;
  json sw = json::object();
  for (const auto& [key, values] : sweep) sw[key] = values;
  doc["sweep"] = sw;
  doc["params"] = params;
  return doc;
}

absl::StatusOr<ExperimentConfig> ParseConfig(
    const json& doc, std::optional<std::string_view> mechanism_override) {
  RETURN_IF_ERROR(CheckKeys(doc,
                            {"mechanism", "seed", "trials", "workers",
                             "dataset", "sweep", "params", "run"},
                            "config"));
  ExperimentConfig cfg;
  std::string name;
  if (mechanism_override.has_value()) {
    name = std::string(*mechanism_override);
  } else if (doc.contains("mechanism") && doc.at("mechanism").is_string()) {
    name = doc.at("mechanism").get<std::string>();
  } else {
    return absl::InvalidArgumentError("no mechanism given");
  }
  ASSIGN_OR_RETURN(cfg.mechanism, ParseMechanism(name));

  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    const bool negative =
        s.is_number_integer() && !s.is_number_unsigned() &&
        s.get<std::int64_t>() < 0;
    if (!s.is_number_integer() || negative) {
      return absl::InvalidArgumentError("'seed' must be a non-negative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("trials")) {
    if (!doc.at("trials").is_number_integer() || doc.at("trials").get<int>() < 0) {
      return absl::InvalidArgumentError("'trials' must be a non-negative integer");
    }
    cfg.trials = doc.at("trials").get<int>();
  }

  const json ds = doc.value("dataset", json::object());
  RETURN_IF_ERROR(CheckKeys(
      ds, {"family", "path", "margin", "q", "std", "label_noise"}, "dataset"));
  if (ds.contains("family")) cfg.dataset.family = ds.at("family").get<std::string>();
  if (ds.contains("path")) cfg.dataset.path = ds.at("path").get<std::string>();
  ASSIGN_OR_RETURN(cfg.dataset.margin, NumberField(ds, "margin", 0.2));
  ASSIGN_OR_RETURN(cfg.dataset.q, NumberField(ds, "q", 0.3));
  ASSIGN_OR_RETURN(cfg.dataset.std_dev, NumberField(ds, "std", 0.5));
  ASSIGN_OR_RETURN(cfg.dataset.label_noise, NumberField(ds, "label_noise", 0.0));
  if (!(cfg.dataset.margin >= 0 && cfg.dataset.margin < 1)) {
    return absl::InvalidArgumentError("dataset margin must be in [0, 1)");
  }
  if (!(cfg.dataset.q >= 0 && cfg.dataset.q <= 1)) {
    return absl::InvalidArgumentError("dataset q must be in [0, 1]");
  }
  if (!(cfg.dataset.std_dev > 0)) {
    return absl::InvalidArgumentError("dataset std must be positive");
  }
  if (!(cfg.dataset.label_noise >= 0 && cfg.dataset.label_noise <= 0.5)) {
    return absl::InvalidArgumentError("dataset label_noise must be in [0, 0.5]");
  }

  const std::set<std::string>& allowed = AllowedParams(cfg.mechanism);
  const json params = doc.value("params", json::object());
  RETURN_IF_ERROR(CheckKeys(params, allowed, "params"));
  cfg.params = params;

  const json sweep = doc.value("sweep", json::object());
  const std::set<std::string> sweepable(SweepKeys().begin(), SweepKeys().end());
  RETURN_IF_ERROR(CheckKeys(sweep, allowed, "sweep"));
  for (const auto& [key, value] : sweep.items()) {
    if (!sweepable.contains(key)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("'%s' cannot be swept", key));
    }
    std::vector<double> values;
    if (value.is_number()) {
      values.push_back(value.get<double>());
    } else if (value.is_array()) {
      for (const json& v : value) {
        if (!v.is_number()) {
          return absl::InvalidArgumentError(
              absl::StrFormat("sweep '%s' must hold numbers", key));
        }
        values.push_back(v.get<double>());
      }
    } else {
      return absl::InvalidArgumentError(
          absl::StrFormat("sweep '%s' must be a number or a list", key));
    }
    cfg.sweep[key] = std::move(values);
  }
  return cfg;
}

absl::StatusOr<ExperimentConfig> LoadConfig(
    const std::string& path,
    std::optional<std::string_view> mechanism_override) {
  std::ifstream in(path);
  if (!in) {
    return absl::InvalidArgumentError(absl::StrFormat("cannot open %s", path));
  }
  json doc = json::parse(in, nullptr, /*allow_exceptions=*/false,
                         /*ignore_comments=*/true);
  if (doc.is_discarded()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s is not valid JSON", path));
  }
  return ParseConfig(doc, mechanism_override);
}

}  // namespace ldp::harness
