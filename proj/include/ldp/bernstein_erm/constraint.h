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


#ifndef LDP_BERNSTEIN_ERM_CONSTRAINT_H_
#define LDP_BERNSTEIN_ERM_CONSTRAINT_H_

#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace ldp::bernstein_erm {

// Feasible set inside [0,1]^p: an axis-aligned box or a Euclidean ball.
class Constraint {
 public:
  enum class Kind { kBox, kBall };

  static absl::StatusOr<Constraint> UnitCube(int p);
  static absl::StatusOr<Constraint> Box(std::vector<double> lower,
                                        std::vector<double> upper);
  static absl::StatusOr<Constraint> Ball(std::vector<double> center,
                                         double radius);

  Kind kind() const { return kind_; }
  int p() const { return static_cast<int>(lower_.size()); }
  // Bounding box (the box itself for kBox).
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  const std::vector<double>& center() const { return center_; }
  double radius() const { return radius_; }

  void Project(std::span<double> w) const;
  bool Contains(std::span<const double> w, double tol = 1e-12) const;
  // Feasible range of w + t e_axis, as [t_lo, t_hi].
  void AxisRange(std::span<const double> w, int axis, double* t_lo,
                 double* t_hi) const;

 private:
  Constraint(Kind kind, std::vector<double> lower, std::vector<double> upper,
             std::vector<double> center, double radius)
      : kind_(kind),
        lower_(std::move(lower)),
        upper_(std::move(upper)),
        center_(std::move(center)),
        radius_(radius) {}

  Kind kind_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> center_;
  double radius_;
};

}  // namespace ldp::bernstein_erm

#endif  // LDP_BERNSTEIN_ERM_CONSTRAINT_H_
