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


#ifndef LDP_BERNSTEIN_ERM_BERNSTEIN_MODEL_H_
#define LDP_BERNSTEIN_ERM_BERNSTEIN_MODEL_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/bernstein_erm/constraint.h"
#include "ldp/bernstein_erm/minimize.h"
#include "ldp/polyapprox/bernstein.h"

namespace ldp::bernstein_erm {

inline constexpr std::size_t kDefaultGridCap = std::size_t{1} << 20;

// The (k+1)^p points v/k in lexicographic order, last coordinate fastest.
absl::StatusOr<std::vector<std::vector<double>>> GridPoints(
    int k, int p, std::size_t cap = kDefaultGridCap);

// Grid values plus the iterated Bernstein operator that interpolates them.
class BernsteinModel {
 public:
  static absl::StatusOr<BernsteinModel> Create(
      const polyapprox::BernsteinOperatorSpec& spec,
      std::vector<double> grid_values);

  const polyapprox::BernsteinOperatorSpec& spec() const { return op_.spec(); }
  const std::vector<double>& grid_values() const { return grid_values_; }

  absl::StatusOr<double> Evaluate(std::span<const double> y) const;
  absl::StatusOr<double> EvaluateWithGradient(std::span<const double> y,
                                              std::span<double> grad) const;

 private:
  BernsteinModel(polyapprox::IteratedBernsteinOperator op,
                 std::vector<double> grid_values)
      : op_(std::move(op)), grid_values_(std::move(grid_values)) {}

  polyapprox::IteratedBernsteinOperator op_;
  std::vector<double> grid_values_;
};

// Minimizer of the model over the constraint (which lies inside the cube).
MinimizeResult MinimizeModel(const BernsteinModel& model,
                             const Constraint& constraint,
                             const MinimizeOptions& options = {});

}  // namespace ldp::bernstein_erm

#endif  // LDP_BERNSTEIN_ERM_BERNSTEIN_MODEL_H_
