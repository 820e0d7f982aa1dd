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


#include "ldp/bernstein_erm/constraint.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"

namespace ldp::bernstein_erm {

absl::StatusOr<Constraint> Constraint::UnitCube(int p) {
  if (p < 1) return absl::InvalidArgumentError("dimension must be >= 1");
  return Box(std::vector<double>(p, 0.0), std::vector<double>(p, 1.0));
}

absl::StatusOr<Constraint> Constraint::Box(std::vector<double> lower,
                                           std::vector<double> upper) {
  if (lower.empty() || lower.size() != upper.size()) {
    return absl::InvalidArgumentError("box bounds must be non-empty and match");
  }
  for (std::size_t a = 0; a < lower.size(); ++a) {
    if (!(lower[a] >= 0 && upper[a] <= 1 && lower[a] <= upper[a])) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "box side %d [%g, %g] is empty or leaves [0, 1]", a, lower[a],
          upper[a]));
    }
  }
  std::vector<double> center(lower.size());
  for (std::size_t a = 0; a < lower.size(); ++a) {
    center[a] = 0.5 * (lower[a] + upper[a]);
  }
  return Constraint(Kind::kBox, std::move(lower), std::move(upper),
                    std::move(center), 0.0);
}

absl::StatusOr<Constraint> Constraint::Ball(std::vector<double> center,
                                            double radius) {
  if (center.empty()) return absl::InvalidArgumentError("ball center is empty");
  if (!(radius >= 0)) return absl::InvalidArgumentError("radius must be >= 0");
  std::vector<double> lower(center.size()), upper(center.size());
  for (std::size_t a = 0; a < center.size(); ++a) {
    lower[a] = center[a] - radius;
    upper[a] = center[a] + radius;
    if (lower[a] < -1e-12 || upper[a] > 1 + 1e-12) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "ball (center %g, radius %g) leaves [0, 1] on axis %d", center[a],
          radius, a));
    }
    lower[a] = std::max(lower[a], 0.0);
    upper[a] = std::min(upper[a], 1.0);
  }
  return Constraint(Kind::kBall, std::move(lower), std::move(upper),
                    std::move(center), radius);
}

void Constraint::Project(std::span<double> w) const {
  if (kind_ == Kind::kBox) {
    for (std::size_t a = 0; a < w.size(); ++a) {
      w[a] = std::clamp(w[a], lower_[a], upper_[a]);
    }
    return;
  }
  double norm2 = 0.0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    norm2 += (w[a] - center_[a]) * (w[a] - center_[a]);
  }
  const double norm = std::sqrt(norm2);
  if (norm > radius_) {
    const double shrink = radius_ / norm;
    for (std::size_t a = 0; a < w.size(); ++a) {
      w[a] = center_[a] + shrink * (w[a] - center_[a]);
    }
  }
  // Guard against rounding past the cube.
  for (std::size_t a = 0; a < w.size(); ++a) {
    w[a] = std::clamp(w[a], 0.0, 1.0);
  }
}

bool Constraint::Contains(std::span<const double> w, double tol) const {
  if (kind_ == Kind::kBox) {
    for (std::size_t a = 0; a < w.size(); ++a) {
      if (w[a] < lower_[a] - tol || w[a] > upper_[a] + tol) return false;
    }
    return true;
  }
  double norm2 = 0.0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    norm2 += (w[a] - center_[a]) * (w[a] - center_[a]);
  }
  return std::sqrt(norm2) <= radius_ + tol;
}

void Constraint::AxisRange(std::span<const double> w, int axis, double* t_lo,
                           double* t_hi) const {
  if (kind_ == Kind::kBox) {
    *t_lo = lower_[axis] - w[axis];
    *t_hi = upper_[axis] - w[axis];
    return;
  }
  // |w - c + t e|^2 <= r^2  <=>  t^2 + 2 t d + (|w - c|^2 - r^2) <= 0.
  double norm2 = 0.0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    norm2 += (w[a] - center_[a]) * (w[a] - center_[a]);
  }
  const double d = w[axis] - center_[axis];
  const double disc = std::max(0.0, d * d - (norm2 - radius_ * radius_));
  *t_lo = -d - std::sqrt(disc);
  *t_hi = -d + std::sqrt(disc);
}

}  // namespace ldp::bernstein_erm
