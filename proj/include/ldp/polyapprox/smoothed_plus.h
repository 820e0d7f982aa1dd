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


// Smooth surrogates of the hinge and plus functions used by the linear-model
// mechanisms.

#ifndef LDP_POLYAPPROX_SMOOTHED_PLUS_H_
#define LDP_POLYAPPROX_SMOOTHED_PLUS_H_

#include "absl/status/statusor.h"
#include "ldp/polyapprox/bernstein.h"

namespace ldp::polyapprox {

// f_beta(x) = (1/2 - x + sqrt((1/2 - x)^2 + beta^2)) / 2, a smoothing of
// max(0, 1/2 - x) within beta / 2. Requires 0 < beta <= 1.
class SmoothedPlus {
 public:
  static absl::StatusOr<SmoothedPlus> Create(double beta);

  double beta() const { return beta_; }
  double Value(double x) const;
  double Deriv(double x) const;

 private:
  explicit SmoothedPlus(double beta) : beta_(beta) {}
  double beta_;
};

// h_beta(x) = (x + sqrt(x^2 + beta^2)) / 2, a smoothing of max(0, x).
class HBeta {
 public:
  static absl::StatusOr<HBeta> Create(double beta);

  double beta() const { return beta_; }
  double Value(double x) const;
  double Deriv(double x) const;

 private:
  explicit HBeta(double beta) : beta_(beta) {}
  double beta_;
};

// Degree-d Bernstein form of the derivative on [lo, hi]:
// c_j = deriv(lo + (hi - lo) j / d).
absl::StatusOr<BernsteinPolynomial> BernsteinDerivCoeffs(
    const SmoothedPlus& f, int d, double lo = 0.0, double hi = 1.0);
absl::StatusOr<BernsteinPolynomial> BernsteinDerivCoeffs(
    const HBeta& f, int d, double lo = 0.0, double hi = 1.0);

}  // namespace ldp::polyapprox

#endif  // LDP_POLYAPPROX_SMOOTHED_PLUS_H_
