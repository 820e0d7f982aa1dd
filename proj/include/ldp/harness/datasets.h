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


// Synthetic dataset families and CSV loading, plus adapters to each
// mechanism's dataset type.

#ifndef LDP_HARNESS_DATASETS_H_
#define LDP_HARNESS_DATASETS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/glm_erm/ball_dataset.h"
#include "ldp/harness/config.h"
#include "ldp/primitives/rng.h"
#include "ldp/query_release/datasets.h"

namespace ldp::harness {

// Where the feature rows live.
enum class Domain { kUnitCube, kUnitBall, kBits };

struct RawDataset {
  std::size_t n = 0;
  std::size_t p = 0;
  Domain domain = Domain::kUnitCube;
  std::vector<double> features;  // n x p row-major
  std::vector<double> labels;    // empty or n entries in {-1, +1}
};

// Families:
//   uniform-cube           U[0,1]^p
//   gaussian-ball-clipped  N(0, std^2 I) scaled back onto the unit ball,
//                          label sign(x_1) flipped w.p. label_noise
//   separable-two-class    y = +-1, y x_1 in [margin, 1], rest uniform in
//                          the remaining ball, so w = e_1 has margin
//                          `margin` on every record
//   bernoulli-bits         independent bits with P(1) = q
absl::StatusOr<RawDataset> GenerateDataset(const DatasetSpec& spec,
                                           std::string_view family,
                                           std::size_t n, std::size_t p,
                                           const Rng& rng);

// Numeric CSV, one record per line; a non-numeric first line is taken as a
// header. With `labeled` the last column is the label.
absl::StatusOr<RawDataset> LoadCsvDataset(const std::string& path,
                                          bool labeled);

// Records in [0,1]^p. Ball rows are mapped by (x + 1) / 2.
absl::StatusOr<std::vector<double>> ToCubeRecords(const RawDataset& raw);
absl::StatusOr<glm_erm::BallDataset> ToBallDataset(const RawDataset& raw);
absl::StatusOr<query_release::BinaryDataset> ToBinaryDataset(
    const RawDataset& raw);
// Rows in [-1,1]^p. Cube and bit rows are mapped by 2x - 1.
absl::StatusOr<query_release::BoxDataset> ToBoxDataset(const RawDataset& raw);

}  // namespace ldp::harness

#endif  // LDP_HARNESS_DATASETS_H_
