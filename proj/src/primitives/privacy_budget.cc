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

#include "ldp/primitives/privacy_budget.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace ldp {

absl::StatusOr<PrivacyBudget> PrivacyBudget::Create(double epsilon,
                                                    double delta) {
  if (!std::isfinite(epsilon) || epsilon <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be positive and finite, got ", epsilon));
  }
  if (!(delta >= 0 && delta < 1)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in [0, 1), got ", delta));
  }
  return PrivacyBudget(epsilon, delta);
}

absl::StatusOr<PrivacyBudget> PrivacyBudget::SplitEvenly(double parts) const {
  if (!(parts >= 1)) {
    return absl::InvalidArgumentError(
        absl::StrCat("budget must be split into at least one part, got ",
                     parts));
  }
  return Create(epsilon_ / parts, delta_);
}

absl::Status PrivacyBudget::RequireOneBitRegime() const {
  if (epsilon_ > kOneBitMaxEpsilon) {
    return absl::InvalidArgumentError(absl::StrCat(
        "the 1-bit encoder needs epsilon <= ln 2, got ", epsilon_));
  }
  return absl::OkStatus();
}

absl::Status PrivacyBudget::RequirePositiveDelta() const {
  if (delta_ <= 0) {
    return absl::InvalidArgumentError(
        "the Gaussian mechanism needs delta > 0");
  }
  return absl::OkStatus();
}

}  // namespace ldp
