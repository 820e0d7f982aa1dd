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


#include "ldp/glm_erm/linear_loss.h"

#include <cmath>
#include <string>

#include "absl/strings/str_format.h"

namespace ldp::glm_erm {

LinearLoss HingeLoss() {
  return {"hinge", [](double x) { return std::max(0.0, 0.5 - x); },
          [](double x) { return x < 0.5 ? -1.0 : 0.0; }};
}

LinearLoss AbsoluteLoss() {
  return {"absolute", [](double x) { return std::fabs(x); },
          [](double x) { return x < 0 ? -1.0 : 1.0; }};
}

LinearLoss HalfSquareLoss() {
  return {"half-square", [](double x) { return 0.5 * x * x; },
          [](double x) { return x; }};
}

LinearLoss LogisticLoss() {
  return {"logistic", [](double x) { return std::log1p(std::exp(-x)); },
          [](double x) { return -1.0 / (1.0 + std::exp(x)); }};
}

LinearLoss HuberLoss(double delta) {
  return {"huber",
          [delta](double x) {
            const double a = std::fabs(x);
            return a <= delta ? x * x / (2 * delta) : a - delta / 2;
          },
          [delta](double x) { return std::clamp(x / delta, -1.0, 1.0); }};
}

LinearLoss AffineLoss(double slope) {
  return {"affine", [slope](double x) { return slope * x; },
          [slope](double) { return slope; }};
}

absl::StatusOr<LinearLoss> LinearLossByName(std::string_view name) {
  if (name == "hinge") return HingeLoss();
  if (name == "absolute") return AbsoluteLoss();
  if (name == "half-square") return HalfSquareLoss();
  if (name == "logistic") return LogisticLoss();
  if (name == "huber") return HuberLoss(0.5);
  if (name == "affine") return AffineLoss(0.5);
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown loss '%s' (hinge|absolute|half-square|logistic|huber|affine)",
      std::string(name)));
}

}  // namespace ldp::glm_erm
