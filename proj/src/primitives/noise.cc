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

#include "ldp/primitives/noise.h"

#include <cmath>
#include <random>

#include "absl/strings/str_cat.h"

namespace ldp {

absl::StatusOr<LaplaceNoise> LaplaceNoise::Create(double scale) {
  if (!std::isfinite(scale) || scale <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("Laplace scale must be positive and finite, got ", scale));
  }
  return LaplaceNoise(scale);
}

double LaplaceNoise::Draw(Rng& rng) const {
  // Inverse CDF on u in (-1/2, 1/2).
  const double u = rng.UniformOpen() - 0.5;
  const double magnitude = -scale_ * std::log1p(-2.0 * std::fabs(u));
  return u < 0 ? -magnitude : magnitude;
}

double LaplaceNoise::LogDensity(double x) const {
  return -std::fabs(x) / scale_ - std::log(2.0 * scale_);
}

absl::StatusOr<GaussianNoise> GaussianNoise::Create(double stddev) {
  if (!std::isfinite(stddev) || stddev <= 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Gaussian std must be positive and finite, got ", stddev));
  }
  return GaussianNoise(stddev);
}

double GaussianNoise::Draw(Rng& rng) const {
  std::normal_distribution<double> dist(0.0, stddev_);
  return dist(rng);
}

absl::StatusOr<double> LaplaceDraw(double scale, Rng& rng) {
  absl::StatusOr<LaplaceNoise> noise = LaplaceNoise::Create(scale);
  if (!noise.ok()) return noise.status();
  return noise->Draw(rng);
}

absl::StatusOr<double> GaussianDraw(double stddev, Rng& rng) {
  absl::StatusOr<GaussianNoise> noise = GaussianNoise::Create(stddev);
  if (!noise.ok()) return noise.status();
  return noise->Draw(rng);
}

}  // namespace ldp
