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

// Non-interactive averaging protocols. Every player sends one privatized
// message and the server averages.

#ifndef LDP_PRIMITIVES_LDP_AVG_H_
#define LDP_PRIMITIVES_LDP_AVG_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/primitives/privacy_budget.h"
#include "ldp/primitives/rng.h"
#include "ldp/primitives/run_notes.h"
#include "ldp/primitives/transcript.h"

namespace ldp {

// Scalar protocol: player i sends v_i + Lap(bound / epsilon); the server
// returns the mean of the messages. Values must lie in [0, bound].
absl::StatusOr<double> LdpAvg1d(std::span<const double> values, double bound,
                                const PrivacyBudget& budget, const Rng& rng,
                                Transcript* transcript = nullptr);

enum class AveragingMode {
  kPrivate,
  // Exact average, no sampling and no noise. For tests that isolate the
  // approximation error of a downstream construction.
  kNonPrivate,
};

struct VecAvgOptions {
  AveragingMode mode = AveragingMode::kPrivate;
  // Failure probability used only for the sample-size warning.
  double beta = 0.05;
};

// Player i's value at coordinate j. Called at most once per player in the
// private mode, so callers can avoid materializing n x p matrices.
using CoordinateSource = std::function<double(std::size_t i, std::size_t j)>;

// Vector protocol: each player draws a coordinate j uniformly from [p] and
// sends (j, p * (v_ij + Lap(bound / epsilon))). The server sums messages per
// coordinate and divides by n. Warns when n < 8 p log(8 p / beta).
absl::StatusOr<std::vector<double>> LdpAvgVec(
    std::size_t n, std::size_t p, const CoordinateSource& source, double bound,
    const PrivacyBudget& budget, const Rng& rng,
    const VecAvgOptions& options = {}, RunNotes* notes = nullptr,
    Transcript* transcript = nullptr);

absl::StatusOr<std::vector<double>> LdpAvgVec(
    std::span<const std::vector<double>> vectors, double bound,
    const PrivacyBudget& budget, const Rng& rng,
    const VecAvgOptions& options = {}, RunNotes* notes = nullptr,
    Transcript* transcript = nullptr);

// Sample size below which the vector protocol's guarantee does not apply.
double LdpAvgVecThreshold(std::size_t p, double beta);

}  // namespace ldp

#endif  // LDP_PRIMITIVES_LDP_AVG_H_
