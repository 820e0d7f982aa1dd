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


#include "ldp/glm_erm/ball_dataset.h"

#include <cmath>

#include "absl/strings/str_format.h"
#include "ldp/kernels/kernels.h"

namespace ldp::glm_erm {

absl::StatusOr<BallDataset> BallDataset::Create(std::size_t p,
                                                std::vector<double> features,
                                                std::vector<double> labels) {
  if (p == 0) return absl::InvalidArgumentError("dimension must be positive");
  if (labels.empty()) return absl::InvalidArgumentError("dataset is empty");
  if (features.size() != labels.size() * p) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "feature buffer has %d entries, expected %d x %d", features.size(),
        labels.size(), p));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::span<const double> row(features.data() + i * p, p);
    const double norm = std::sqrt(kernels::Dot(row, row));
    if (!(norm <= 1.0 + 1e-12)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("record %d has ||x|| = %g > 1", i, norm));
    }
    if (!(std::fabs(labels[i]) <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("record %d has |y| = %g > 1", i, labels[i]));
    }
  }
  return BallDataset(p, std::move(features), std::move(labels));
}

void BallDataset::Margins(std::span<const double> w,
                          std::span<double> out) const {
  kernels::Gemv(features_, n(), p_, w, out);
  for (std::size_t i = 0; i < n(); ++i) out[i] *= labels_[i];
}

double BallDataset::EmpiricalRisk(const LinearLoss& loss,
                                  std::span<const double> w) const {
  std::vector<double> margins(n());
  Margins(w, margins);
  double sum = 0.0;
  for (double m : margins) sum += loss.value(m);
  return sum / static_cast<double>(n());
}

}  // namespace ldp::glm_erm
