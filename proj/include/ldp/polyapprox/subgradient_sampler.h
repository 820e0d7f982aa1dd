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


// Sampling s with u ~ U[f'(-1), f'(1)] and u in the subdifferential of f at
// s. For convex 1-Lipschitz f on [-1, 1],
//   f(theta) = (f'(1) - f'(-1)) / 2 * E|theta - s|
//              + (f'(1) + f'(-1)) / 2 * theta + c.

#ifndef LDP_POLYAPPROX_SUBGRADIENT_SAMPLER_H_
#define LDP_POLYAPPROX_SUBGRADIENT_SAMPLER_H_

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/primitives/rng.h"

namespace ldp::polyapprox {

inline constexpr double kSubgradientBisectionTol = 1e-10;

class SubgradientSampler {
 public:
  // f_prime must be non-decreasing on [-1, 1] with |f_prime| <= 1. Returns
  // FailedPrecondition when f'(-1) == f'(1) (f is affine).
  static absl::StatusOr<SubgradientSampler> Create(
      std::function<double(double)> f_prime);

  double lower() const { return lower_; }
  double upper() const { return upper_; }

  // Largest s in [-1, 1] with f'(s) <= u, to kSubgradientBisectionTol.
  double Inverse(double u) const;
  double Sample(Rng& rng) const;

 private:
  SubgradientSampler(std::function<double(double)> f_prime, double lower,
                     double upper)
      : f_prime_(std::move(f_prime)), lower_(lower), upper_(upper) {}

  std::function<double(double)> f_prime_;
  double lower_;
  double upper_;
};

// Monte-Carlo right-hand side of the identity above at each theta, from m
// common draws, with c fixed so that the estimate at theta = 0 equals
// f_at_zero. For affine f only the linear part is used (exact).
absl::StatusOr<std::vector<double>> ReconstructFromSubgradientSamples(
    const std::function<double(double)>& f_prime, double f_at_zero,
    std::span<const double> thetas, int m, Rng& rng);

}  // namespace ldp::polyapprox

#endif  // LDP_POLYAPPROX_SUBGRADIENT_SAMPLER_H_
