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


#include "ldp/bernstein_erm/bernstein_model.h"

#include <algorithm>

#include "absl/strings/str_format.h"
#include "ldp/base/status_macros.h"

namespace ldp::bernstein_erm {

absl::StatusOr<std::vector<std::vector<double>>> GridPoints(int k, int p,
                                                            std::size_t cap) {
  const polyapprox::BernsteinOperatorSpec spec{k, 1, p};
  if (k < 1 || p < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("grid needs k >= 1 and p >= 1, got k=%d p=%d", k, p));
  }
  const std::size_t count = spec.NumGridPoints();
  if (count == 0 || count > cap) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "grid (k+1)^p with k=%d p=%d exceeds the cap of %d points; lower k "
        "(which raises the approximation error) or raise the cap (each player "
        "then answers more points, so n must grow to keep the noise level)",
        k, p, cap));
  }
  std::vector<std::vector<double>> points(count, std::vector<double>(p));
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (int a = p - 1; a >= 0; --a) {
      points[idx][a] = static_cast<double>(rest % (k + 1)) / k;
      rest /= (k + 1);
    }
  }
  return points;
}

absl::StatusOr<BernsteinModel> BernsteinModel::Create(
    const polyapprox::BernsteinOperatorSpec& spec,
    std::vector<double> grid_values) {
  ASSIGN_OR_RETURN(polyapprox::IteratedBernsteinOperator op,
                   polyapprox::IteratedBernsteinOperator::Create(spec));
  if (grid_values.size() != op.num_grid_points()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "model needs %d grid values, got %d", op.num_grid_points(),
        grid_values.size()));
  }
  return BernsteinModel(std::move(op), std::move(grid_values));
}

absl::StatusOr<double> BernsteinModel::Evaluate(std::span<const double> y) const {
  return op_.Evaluate(grid_values_, y);
}

absl::StatusOr<double> BernsteinModel::EvaluateWithGradient(
    std::span<const double> y, std::span<double> grad) const {
  return op_.EvaluateWithGradient(grid_values_, y, grad);
}

MinimizeResult MinimizeModel(const BernsteinModel& model,
                             const Constraint& constraint,
                             const MinimizeOptions& options) {
  std::vector<double> clipped(constraint.p());
  Objective f = [&model, &clipped](std::span<const double> w,
                                   std::span<double> grad) {
    for (std::size_t a = 0; a < w.size(); ++a) {
      clipped[a] = std::clamp(w[a], 0.0, 1.0);
    }
    // The constraint lies inside the cube, so evaluation cannot fail.
    if (grad.empty()) return *model.Evaluate(clipped);
    return *model.EvaluateWithGradient(clipped, grad);
  };
  return MinimizeMultiStart(f, constraint, options);
}

}  // namespace ldp::bernstein_erm
