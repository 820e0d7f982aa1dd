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

#ifndef LDP_PRIMITIVES_NOISE_H_
#define LDP_PRIMITIVES_NOISE_H_

#include "absl/status/statusor.h"
#include "ldp/primitives/rng.h"

namespace ldp {

// Centered Laplace law with density exp(-|x| / scale) / (2 scale).
class LaplaceNoise {
 public:
  static absl::StatusOr<LaplaceNoise> Create(double scale);

  double scale() const { return scale_; }
  double Draw(Rng& rng) const;
  double LogDensity(double x) const;

 private:
  explicit LaplaceNoise(double scale) : scale_(scale) {}
  double scale_;
};

// Centered normal law with standard deviation `stddev`.
class GaussianNoise {
 public:
  static absl::StatusOr<GaussianNoise> Create(double stddev);

  double stddev() const { return stddev_; }
  double Draw(Rng& rng) const;

 private:
  explicit GaussianNoise(double stddev) : stddev_(stddev) {}
  double stddev_;
};

absl::StatusOr<double> LaplaceDraw(double scale, Rng& rng);
absl::StatusOr<double> GaussianDraw(double stddev, Rng& rng);

}  // namespace ldp

#endif  // LDP_PRIMITIVES_NOISE_H_
