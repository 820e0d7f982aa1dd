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


#include "ldp/harness/datasets.h"

#include <cmath>
#include <fstream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "ldp/primitives/noise.h"

namespace ldp::harness {
namespace {

const GaussianNoise& Unit() {
  static const GaussianNoise* const kUnit = new GaussianNoise(*GaussianNoise::Create(1.0));
  return *kUnit;
}

double StdNormal(Rng& rng) { return Unit().Draw(rng); }

// Uniform point in the p-ball of the given radius, written to out[0..p).
void UniformInBall(Rng& rng, double radius, std::span<double> out) {
  if (out.empty()) return;
  double norm = 0;
  for (double& v : out) {
    v = StdNormal(rng);
    norm += v * v;
  }
  norm = std::sqrt(norm);
  const double r =
      radius * std::pow(rng.Uniform(), 1.0 / static_cast<double>(out.size()));
  for (double& v : out) v = norm > 0 ? v / norm * r : 0.0;
}

}  // namespace

absl::StatusOr<RawDataset> GenerateDataset(const DatasetSpec& spec,
                                           std::string_view family,
                                           std::size_t n, std::size_t p,
                                           const Rng& seed) {
  if (p == 0) return absl::InvalidArgumentError("dataset needs p >= 1");
  Rng rng = seed;
  RawDataset raw;
  raw.n = n;
  raw.p = p;
  raw.features.resize(n * p);
  if (family == "uniform-cube") {
    raw.domain = Domain::kUnitCube;
    for (double& v : raw.features) v = rng.Uniform();
  } else if (family == "bernoulli-bits") {
    raw.domain = Domain::kBits;
    for (double& v : raw.features) v = rng.Uniform() < spec.q ? 1.0 : 0.0;
  } else if (family == "gaussian-ball-clipped") {
    raw.domain = Domain::kUnitBall;
    raw.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      double* x = raw.features.data() + i * p;
      double norm = 0;
      for (std::size_t j = 0; j < p; ++j) {
        x[j] = spec.std_dev * StdNormal(rng);
        norm += x[j] * x[j];
      }
      norm = std::sqrt(norm);
      if (norm > 1) {
        for (std::size_t j = 0; j < p; ++j) x[j] /= norm;
      }
      double y = x[0] >= 0 ? 1.0 : -1.0;
      if (rng.Uniform() < spec.label_noise) y = -y;
      raw.labels[i] = y;
    }
  } else if (family == "separable-two-class") {
    raw.domain = Domain::kUnitBall;
    raw.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      double* x = raw.features.data() + i * p;
      const double y = rng.Uniform() < 0.5 ? -1.0 : 1.0;
      const double along = spec.margin + (1 - spec.margin) * rng.Uniform();
      x[0] = y * along;
      UniformInBall(rng, std::sqrt(std::max(0.0, 1 - along * along)),
                    std::span<double>(x + 1, p - 1));
      raw.labels[i] = y;
    }
  } else {
    return absl::InvalidArgumentError(absl::StrFormat(
        "unknown dataset family '%s' (uniform-cube|gaussian-ball-clipped|"
        "separable-two-class|bernoulli-bits)",
        std::string(family)));
  }
  return raw;
}

absl::StatusOr<RawDataset> LoadCsvDataset(const std::string& path,
                                          bool labeled) {
  std::ifstream in(path);
  if (!in) return absl::InvalidArgumentError(absl::StrFormat("cannot open %s", path));
  RawDataset raw;
  std::string line;
  int line_no = 0;
  std::size_t cols = 0;
  bool all_bits = true;
  bool in_cube = true;
  while (std::getline(in, line)) {
    ++line_no;
    const absl::string_view stripped = absl::StripAsciiWhitespace(line);
    if (stripped.empty()) continue;
    std::vector<double> row;
    bool numeric = true;
    for (absl::string_view cell : absl::StrSplit(stripped, ',')) {
      double v;
      if (!absl::SimpleAtod(absl::StripAsciiWhitespace(cell), &v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (raw.n == 0 && cols == 0) continue;  // header
      return absl::InvalidArgumentError(
          absl::StrFormat("%s:%d: non-numeric row", path, line_no));
    }
    if (cols == 0) cols = row.size();
    if (row.size() != cols) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "%s:%d: %d columns, expected %d", path, line_no, row.size(), cols));
    }
    const std::size_t p = labeled ? cols - 1 : cols;
    for (std::size_t j = 0; j < p; ++j) {
      all_bits = all_bits && (row[j] == 0.0 || row[j] == 1.0);
      in_cube = in_cube && row[j] >= 0.0 && row[j] <= 1.0;
      raw.features.push_back(row[j]);
    }
    if (labeled) raw.labels.push_back(row.back());
    ++raw.n;
  }
  if (raw.n == 0 || cols < (labeled ? 2u : 1u)) {
    return absl::InvalidArgumentError(absl::StrFormat("%s holds no records", path));
  }
  raw.p = labeled ? cols - 1 : cols;
  raw.domain = all_bits ? Domain::kBits
               : in_cube ? Domain::kUnitCube
                         : Domain::kUnitBall;
  return raw;
}

absl::StatusOr<std::vector<double>> ToCubeRecords(const RawDataset& raw) {
  if (raw.domain != Domain::kUnitBall) return raw.features;
  std::vector<double> out(raw.features.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (std::fabs(raw.features[i]) > 1.0) {
      return absl::InvalidArgumentError("record entry outside [-1, 1]");
    }
    out[i] = (raw.features[i] + 1.0) / 2.0;
  }
  return out;
}

absl::StatusOr<glm_erm::BallDataset> ToBallDataset(const RawDataset& raw) {
  if (raw.labels.size() != raw.n) {
    return absl::InvalidArgumentError(
        "this mechanism needs labeled data (gaussian-ball-clipped, "
        "separable-two-class, or a CSV with a label column)");
  }
  return glm_erm::BallDataset::Create(raw.p, raw.features, raw.labels);
}

absl::StatusOr<query_release::BinaryDataset> ToBinaryDataset(
    const RawDataset& raw) {
  if (raw.domain != Domain::kBits) {
    return absl::InvalidArgumentError(
        "this mechanism needs bit rows (bernoulli-bits or a 0/1 CSV)");
  }
  std::vector<std::uint8_t> bits(raw.features.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = raw.features[i] != 0.0;
  return query_release::BinaryDataset::Create(raw.p, std::move(bits));
}

absl::StatusOr<query_release::BoxDataset> ToBoxDataset(const RawDataset& raw) {
  if (raw.domain == Domain::kUnitBall) {
    return query_release::BoxDataset::Create(raw.p, raw.features);
  }
  std::vector<double> out(raw.features.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 2 * raw.features[i] - 1;
  return query_release::BoxDataset::Create(raw.p, std::move(out));
}

}  // namespace ldp::harness
