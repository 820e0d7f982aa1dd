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


// Generalized linear losses l(w; x, y) = f(y <w, x>) with f convex and
// 1-Lipschitz on [-1, 1].

#ifndef LDP_GLM_ERM_LINEAR_LOSS_H_
#define LDP_GLM_ERM_LINEAR_LOSS_H_

#include <functional>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace ldp::glm_erm {

struct LinearLoss {
  std::string name;
  std::function<double(double)> value;
  // Right derivative, non-decreasing.
  std::function<double(double)> deriv;
};

// max(0, 1/2 - x).
LinearLoss HingeLoss();
// |x|.
LinearLoss AbsoluteLoss();
// x^2 / 2.
LinearLoss HalfSquareLoss();
// log(1 + exp(-x)).
LinearLoss LogisticLoss();
// Huber with threshold `delta` in (0, 1]: x^2 / (2 delta) near 0.
LinearLoss HuberLoss(double delta);
// slope * x, |slope| <= 1.
LinearLoss AffineLoss(double slope);

// hinge | absolute | half-square | logistic | huber | affine.
absl::StatusOr<LinearLoss> LinearLossByName(std::string_view name);

}  // namespace ldp::glm_erm

#endif  // LDP_GLM_ERM_LINEAR_LOSS_H_
