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


// Records (x_i, y_i) with ||x_i|| <= 1 and |y_i| <= 1.

#ifndef LDP_GLM_ERM_BALL_DATASET_H_
#define LDP_GLM_ERM_BALL_DATASET_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/glm_erm/linear_loss.h"

namespace ldp::glm_erm {

class BallDataset {
 public:
  // `features` is n x p row-major. Norms are checked with a 1e-12 slack.
  static absl::StatusOr<BallDataset> Create(std::size_t p,
                                            std::vector<double> features,
                                            std::vector<double> labels);

  std::size_t n() const { return labels_.size(); }
  std::size_t p() const { return p_; }
  std::span<const double> x(std::size_t i) const {
    return {features_.data() + i * p_, p_};
  }
  double y(std::size_t i) const { return labels_[i]; }

  // out[i] = y_i <w, x_i>.
  void Margins(std::span<const double> w, std::span<double> out) const;

  // (1/n) sum_i f(y_i <w, x_i>).
  double EmpiricalRisk(const LinearLoss& loss, std::span<const double> w) const;

 private:
  BallDataset(std::size_t p, std::vector<double> features,
              std::vector<double> labels)
      : p_(p), features_(std::move(features)), labels_(std::move(labels)) {}

  std::size_t p_;
  std::vector<double> features_;
  std::vector<double> labels_;
};

}  // namespace ldp::glm_erm

#endif  // LDP_GLM_ERM_BALL_DATASET_H_
