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

#ifndef LDP_PRIMITIVES_PRIVACY_BUDGET_H_
#define LDP_PRIMITIVES_PRIVACY_BUDGET_H_

#include <numbers>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace ldp {

// Largest epsilon for which the 1-bit encoder's Bernoulli bias stays in
// (0, 1].
inline constexpr double kOneBitMaxEpsilon = std::numbers::ln2;

// (epsilon, delta) with epsilon > 0 and delta in [0, 1).
class PrivacyBudget {
 public:
  static absl::StatusOr<PrivacyBudget> Create(double epsilon,
                                              double delta = 0.0);

  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }

  // Budget with epsilon divided evenly over `parts` releases (basic
  // composition). Delta is left unchanged.
  absl::StatusOr<PrivacyBudget> SplitEvenly(double parts) const;

  absl::Status RequireOneBitRegime() const;
  absl::Status RequirePositiveDelta() const;

 private:
  PrivacyBudget(double epsilon, double delta)
      : epsilon_(epsilon), delta_(delta) {}

  double epsilon_;
  double delta_;
};

}  // namespace ldp

#endif  // LDP_PRIMITIVES_PRIVACY_BUDGET_H_
