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

#include "ldp/primitives/onebit.h"

#include <cmath>

#include "absl/strings/str_format.h"
#include "ldp/base/status_macros.h"

namespace ldp {

absl::StatusOr<PublicRandomness> PublicRandomness::Create(
    std::uint64_t seed, const PrivacyBudget& budget) {
  ASSIGN_OR_RETURN(LaplaceNoise noise,
                   LaplaceNoise::Create(1.0 / budget.epsilon()));
  return PublicRandomness(seed, noise);
}

double PublicRandomness::Draw(std::uint64_t player_index) const {
  Rng stream = root_.Split(rng_tags::kOneBitPublic, player_index);
  return noise_.Draw(stream);
}

absl::StatusOr<double> OneBitBias(double v, double y,
                                  const PrivacyBudget& budget) {
  RETURN_IF_ERROR(budget.RequireOneBitRegime());
  if (!(v >= 0 && v <= 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("1-bit value %g is outside [0, 1]", v));
  }
  if (!std::isfinite(y)) {
    return absl::InvalidArgumentError("public draw must be finite");
  }
  return 0.5 * std::exp(-budget.epsilon() * (std::fabs(y - v) - std::fabs(y)));
}

absl::StatusOr<OneBitMessage> OneBitEncode(double v, double y,
                                           const PrivacyBudget& budget,
                                           Rng& rng) {
  ASSIGN_OR_RETURN(const double bias, OneBitBias(v, y, budget));
  OneBitMessage message;
  message.bias = bias;
  message.bit = rng.Uniform() < bias ? 1 : 0;
  return message;
}

absl::StatusOr<double> OneBitDecode(std::span<const std::uint8_t> bits,
                                    const PublicRandomness& publics,
                                    std::span<const std::size_t> cell) {
  if (cell.empty()) {
    return absl::FailedPreconditionError(
        "empty partition cell; merge it with a neighbour or abort the run");
  }
  double sum = 0.0;
  for (std::size_t i : cell) {
    if (i >= bits.size()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("player %d in the cell has no bit", i));
    }
    if (bits[i] != 0) sum += publics.Draw(i);
  }
  return 2.0 * sum / static_cast<double>(cell.size());
}

}  // namespace ldp
