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

// One-bit protocol with public Laplace strings. Player i holds v in [0, 1]
// and shares y_i ~ Lap(1 / epsilon) with the server. It sends a single bit
// with P[bit = 1] = 0.5 * f(y_i - v) / f(y_i), where f is the Lap(1/epsilon)
// density, so E[y_i * bit] = v / 2.

#ifndef LDP_PRIMITIVES_ONEBIT_H_
#define LDP_PRIMITIVES_ONEBIT_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "absl/status/statusor.h"
#include "ldp/primitives/noise.h"
#include "ldp/primitives/privacy_budget.h"
#include "ldp/primitives/rng.h"

namespace ldp {

// Public draws y_i, regenerated from (seed, i) on demand.
class PublicRandomness {
 public:
  static absl::StatusOr<PublicRandomness> Create(std::uint64_t seed,
                                                 const PrivacyBudget& budget);

  double Draw(std::uint64_t player_index) const;
  std::uint64_t seed() const { return seed_; }

 private:
  PublicRandomness(std::uint64_t seed, LaplaceNoise noise)
      : seed_(seed), root_(seed), noise_(noise) {}

  std::uint64_t seed_;
  Rng root_;
  LaplaceNoise noise_;
};

struct OneBitMessage {
  int bit = 0;
  double bias = 0.5;
};

// 0.5 * exp(-epsilon * (|y - v| - |y|)).
absl::StatusOr<double> OneBitBias(double v, double y,
                                  const PrivacyBudget& budget);

absl::StatusOr<OneBitMessage> OneBitEncode(double v, double y,
                                           const PrivacyBudget& budget,
                                           Rng& rng);

// (2 / |cell|) * sum over the cell of y_i * bit_i. `bits` is indexed by
// player.
absl::StatusOr<double> OneBitDecode(std::span<const std::uint8_t> bits,
                                    const PublicRandomness& publics,
                                    std::span<const std::size_t> cell);

}  // namespace ldp

#endif  // LDP_PRIMITIVES_ONEBIT_H_
