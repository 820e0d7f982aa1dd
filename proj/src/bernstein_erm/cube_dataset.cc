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


#include "ldp/bernstein_erm/cube_dataset.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_format.h"

namespace ldp::bernstein_erm {

absl::StatusOr<CubeDataset> CubeDataset::Create(std::size_t p,
                                                std::size_t record_width,
                                                std::vector<double> records,
                                                CubeLoss loss) {
  if (p == 0) return absl::InvalidArgumentError("dimension p must be >= 1");
  if (record_width == 0 || records.size() % record_width != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "record buffer of %d values is not a multiple of width %d",
        records.size(), record_width));
  }
  if (records.empty()) return absl::InvalidArgumentError("dataset is empty");
  if (!loss) return absl::InvalidArgumentError("loss callable is empty");
  return CubeDataset(p, record_width, std::move(records), std::move(loss));
}

CubeDataset::CubeDataset(const CubeDataset& other)
    : p_(other.p_),
      record_width_(other.record_width_),
      records_(other.records_),
      loss_(other.loss_),
      clipped_(other.clipped_.load()) {}

CubeDataset::CubeDataset(CubeDataset&& other) noexcept
    : p_(other.p_),
      record_width_(other.record_width_),
      records_(std::move(other.records_)),
      loss_(std::move(other.loss_)),
      clipped_(other.clipped_.load()) {}

double CubeDataset::ClippedLoss(std::span<const double> w, std::size_t i) const {
  const double v = loss_(w, record(i));
  if (v >= 0.0 && v <= 1.0) return v;
  clipped_.fetch_add(1, std::memory_order_relaxed);
  return std::isnan(v) ? 0.0 : std::clamp(v, 0.0, 1.0);
}

double CubeDataset::EmpiricalRisk(std::span<const double> w) const {
  double acc = 0.0;
  const std::size_t count = n();
  for (std::size_t i = 0; i < count; ++i) acc += loss_(w, record(i));
  return acc / static_cast<double>(count);
}

}  // namespace ldp::bernstein_erm
