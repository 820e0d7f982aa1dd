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


#include "ldp/polyapprox/smoothed_plus.h"

#include <cmath>

#include "absl/strings/str_format.h"

namespace ldp::polyapprox {

absl::StatusOr<SmoothedPlus> SmoothedPlus::Create(double beta) {
  if (!(beta > 0 && beta <= 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("smoothing beta must lie in (0, 1], got %g", beta));
  }
  return SmoothedPlus(beta);
}

double SmoothedPlus::Value(double x) const {
  const double a = 0.5 - x;
  return 0.5 * (a + std::hypot(a, beta_));
}

double SmoothedPlus::Deriv(double x) const {
  const double a = x - 0.5;
  return 0.5 * (-1.0 + a / std::hypot(a, beta_));
}

absl::StatusOr<HBeta> HBeta::Create(double beta) {
  if (!(beta > 0) || !std::isfinite(beta)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("smoothing beta must be positive, got %g", beta));
  }
  return HBeta(beta);
}

double HBeta::Value(double x) const { return 0.5 * (x + std::hypot(x, beta_)); }

double HBeta::Deriv(double x) const {
  return 0.5 * (1.0 + x / std::hypot(x, beta_));
}

absl::StatusOr<BernsteinPolynomial> BernsteinDerivCoeffs(const SmoothedPlus& f,
                                                         int d, double lo,
                                                         double hi) {
  return BernsteinPolynomial::Interpolate(
      [&f](double x) { return f.Deriv(x); }, d, lo, hi);
}

absl::StatusOr<BernsteinPolynomial> BernsteinDerivCoeffs(const HBeta& f, int d,
                                                         double lo, double hi) {
  return BernsteinPolynomial::Interpolate(
      [&f](double x) { return f.Deriv(x); }, d, lo, hi);
}

}  // namespace ldp::polyapprox
