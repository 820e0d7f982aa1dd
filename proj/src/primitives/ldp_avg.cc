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

#include "ldp/primitives/ldp_avg.h"

#include <bit>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "ldp/base/status_macros.h"
#include "ldp/kernels/kernels.h"
#include "ldp/primitives/noise.h"

namespace ldp {
namespace {

absl::Status CheckBound(double bound) {
  if (!std::isfinite(bound) || bound <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("value bound must be positive, got ", bound));
  }
  return absl::OkStatus();
}

absl::Status CheckValue(double v, double bound, std::size_t player) {
  if (!(v >= 0 && v <= bound)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "player %d value %g is outside [0, %g]", player, v, bound));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<double> LdpAvg1d(std::span<const double> values, double bound,
                                const PrivacyBudget& budget, const Rng& rng,
                                Transcript* transcript) {
  if (values.empty()) {
    return absl::InvalidArgumentError("LDP-AVG needs at least one player");
  }
  RETURN_IF_ERROR(CheckBound(bound));
  ASSIGN_OR_RETURN(const LaplaceNoise noise,
                   LaplaceNoise::Create(bound / budget.epsilon()));
  std::vector<double> messages(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    RETURN_IF_ERROR(CheckValue(values[i], bound, i));
    Rng player = rng.Split(rng_tags::kLdpAvg1d, i);
    messages[i] = values[i] + noise.Draw(player);
    if (transcript != nullptr) {
      transcript->RecordReals(i, std::span<const double>(&messages[i], 1));
    }
  }
  return kernels::Sum(messages) / static_cast<double>(values.size());
}

double LdpAvgVecThreshold(std::size_t p, double beta) {
  const double pd = static_cast<double>(p);
  return 8.0 * pd * std::log(8.0 * pd / beta);
}

absl::StatusOr<std::vector<double>> LdpAvgVec(
    std::size_t n, std::size_t p, const CoordinateSource& source, double bound,
    const PrivacyBudget& budget, const Rng& rng, const VecAvgOptions& options,
    RunNotes* notes, Transcript* transcript) {
  if (n == 0) return absl::InvalidArgumentError("LDP-AVG needs at least one player");
  if (p == 0) return absl::InvalidArgumentError("dimension must be positive");
  RETURN_IF_ERROR(CheckBound(bound));
  if (!(options.beta > 0 && options.beta < 1)) {
    return absl::InvalidArgumentError("beta must lie in (0, 1)");
  }

  std::vector<double> sums(p, 0.0);
  const double nd = static_cast<double>(n);
  if (options.mode == AveragingMode::kNonPrivate) {
    std::vector<double> row(p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        row[j] = source(i, j);
        RETURN_IF_ERROR(CheckValue(row[j], bound, i));
      }
      kernels::Axpy(1.0, row, sums);
    }
    for (double& s : sums) s /= nd;
    return sums;
  }

  const double threshold = LdpAvgVecThreshold(p, options.beta);
  if (nd < threshold) {
    Warn(notes, absl::StrFormat(
                    "ldp_avg_vec: n=%d is below the sample-size threshold "
                    "8p log(8p/beta)=%.1f (p=%d)",
                    n, threshold, p));
  }
  ASSIGN_OR_RETURN(const LaplaceNoise noise,
                   LaplaceNoise::Create(bound / budget.epsilon()));
  const double pd = static_cast<double>(p);
  const auto index_bits = static_cast<std::uint32_t>(std::bit_width(p - 1));
  for (std::size_t i = 0; i < n; ++i) {
    Rng player = rng.Split(rng_tags::kLdpAvgVec, i);
    const std::size_t j = player.UniformInt(p);
    const double v = source(i, j);
    RETURN_IF_ERROR(CheckValue(v, bound, i));
    const double message = pd * (v + noise.Draw(player));
    sums[j] += message;
    if (transcript != nullptr) {
      transcript->RecordReals(i, std::span<const double>(&message, 1),
                              index_bits);
    }
  }
  for (double& s : sums) s /= nd;
  return sums;
}

absl::StatusOr<std::vector<double>> LdpAvgVec(
    std::span<const std::vector<double>> vectors, double bound,
    const PrivacyBudget& budget, const Rng& rng, const VecAvgOptions& options,
    RunNotes* notes, Transcript* transcript) {
  if (vectors.empty()) {
    return absl::InvalidArgumentError("LDP-AVG needs at least one player");
  }
  const std::size_t p = vectors.front().size();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != p) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "player %d sent a vector of dimension %d, expected %d", i,
          vectors[i].size(), p));
    }
  }
  return LdpAvgVec(
      vectors.size(), p,
      [&vectors](std::size_t i, std::size_t j) { return vectors[i][j]; },
      bound, budget, rng, options, notes, transcript);
}

}  // namespace ldp
