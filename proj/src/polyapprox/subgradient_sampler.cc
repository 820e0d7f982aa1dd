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


#include "ldp/polyapprox/subgradient_sampler.h"

#include <cmath>

#include "absl/strings/str_format.h"

namespace ldp::polyapprox {

absl::StatusOr<SubgradientSampler> SubgradientSampler::Create(
    std::function<double(double)> f_prime) {
  const double lower = f_prime(-1.0);
  const double upper = f_prime(1.0);
  if (!std::isfinite(lower) || !std::isfinite(upper) || lower > upper) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "derivative must be finite and non-decreasing; f'(-1)=%g f'(1)=%g",
        lower, upper));
  }
  if (std::fabs(lower) > 1.0 + 1e-12 || std::fabs(upper) > 1.0 + 1e-12) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "function must be 1-Lipschitz; f'(-1)=%g f'(1)=%g", lower, upper));
  }
  if (lower == upper) {
    return absl::FailedPreconditionError(
        "degenerate sampling distribution: f'(-1) == f'(1), f is affine");
  }
  return SubgradientSampler(std::move(f_prime), lower, upper);
}

double SubgradientSampler::Inverse(double u) const {
  if (f_prime_(1.0) <= u) return 1.0;
  double lo = -1.0;
  double hi = 1.0;
  // Invariant: f'(hi) > u; every s < lo has f'(s) <= u once lo moves.
  while (hi - lo > kSubgradientBisectionTol) {
    const double mid = 0.5 * (lo + hi);
    if (f_prime_(mid) <= u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double SubgradientSampler::Sample(Rng& rng) const {
  const double u = lower_ + (upper_ - lower_) * rng.UniformOpen();
  return Inverse(u);
}

absl::StatusOr<std::vector<double>> ReconstructFromSubgradientSamples(
    const std::function<double(double)>& f_prime, double f_at_zero,
    std::span<const double> thetas, int m, Rng& rng) {
  if (m < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("need at least one draw, got %d", m));
  }
  const double lower = f_prime(-1.0);
  const double upper = f_prime(1.0);
  const double slope = 0.5 * (upper + lower);
  std::vector<double> out(thetas.size());
  if (lower == upper) {
    for (std::size_t t = 0; t < thetas.size(); ++t) {
      out[t] = f_at_zero + upper * thetas[t];
    }
    return out;
  }
  absl::StatusOr<SubgradientSampler> sampler = SubgradientSampler::Create(f_prime);
  if (!sampler.ok()) return sampler.status();
  std::vector<double> draws(m);
  for (double& s : draws) s = sampler->Sample(rng);
  const double half_width = 0.5 * (upper - lower);
  auto mean_abs = [&draws](double theta) {
    double acc = 0.0;
    for (double s : draws) acc += std::fabs(theta - s);
    return acc / static_cast<double>(draws.size());
  };
  const double c = f_at_zero - half_width * mean_abs(0.0);
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    out[t] = half_width * mean_abs(thetas[t]) + slope * thetas[t] + c;
  }
  return out;
}

}  // namespace ldp::polyapprox
