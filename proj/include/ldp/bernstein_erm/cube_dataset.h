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


#ifndef LDP_BERNSTEIN_ERM_CUBE_DATASET_H_
#define LDP_BERNSTEIN_ERM_CUBE_DATASET_H_

#include <atomic>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace ldp::bernstein_erm {

// l(w; record) for w in [0,1]^p. Expected to lie in [0, 1].
using CubeLoss =
    std::function<double(std::span<const double> w, std::span<const double> record)>;

// n records of fixed width, stored row-major, plus the loss.
class CubeDataset {
 public:
  static absl::StatusOr<CubeDataset> Create(std::size_t p,
                                            std::size_t record_width,
                                            std::vector<double> records,
                                            CubeLoss loss);

  CubeDataset(const CubeDataset& other);
  CubeDataset(CubeDataset&& other) noexcept;

  std::size_t n() const { return records_.size() / record_width_; }
  std::size_t p() const { return p_; }
  std::size_t record_width() const { return record_width_; }
  std::span<const double> record(std::size_t i) const {
    return {records_.data() + i * record_width_, record_width_};
  }

  // Loss clipped to [0, 1]; each clip is counted.
  double ClippedLoss(std::span<const double> w, std::size_t i) const;
  std::size_t clipped_count() const { return clipped_.load(); }

  // (1/n) sum_i l(w; x_i), unclipped.
  double EmpiricalRisk(std::span<const double> w) const;

 private:
  CubeDataset(std::size_t p, std::size_t record_width,
              std::vector<double> records, CubeLoss loss)
      : p_(p),
        record_width_(record_width),
        records_(std::move(records)),
        loss_(std::move(loss)) {}

  std::size_t p_;
  std::size_t record_width_;
  std::vector<double> records_;
  CubeLoss loss_;
  mutable std::atomic<std::size_t> clipped_{0};
};

}  // namespace ldp::bernstein_erm

#endif  // LDP_BERNSTEIN_ERM_CUBE_DATASET_H_
