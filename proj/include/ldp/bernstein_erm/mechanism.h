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


// Grid mechanisms for ERM on [0,1]^p. Every player evaluates its loss at grid
// points, privatizes, and the server fits an iterated Bernstein surrogate to
// the averaged grid values and minimizes it.
//
//   kLaplacePerPoint: each player answers all (k+1)^p points with the scalar
//     Laplace protocol at epsilon / (k+1)^p each.
//   kOneBit: players are split into (k+1)^p random cells; each player answers
//     only its cell's point with the 1-bit protocol at the full epsilon.

#ifndef LDP_BERNSTEIN_ERM_MECHANISM_H_
#define LDP_BERNSTEIN_ERM_MECHANISM_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/bernstein_erm/bernstein_model.h"
#include "ldp/bernstein_erm/constraint.h"
#include "ldp/bernstein_erm/cube_dataset.h"
#include "ldp/primitives/rng.h"
#include "ldp/primitives/run_notes.h"
#include "ldp/primitives/transcript.h"

namespace ldp::bernstein_erm {

enum class GridMode { kLaplacePerPoint, kOneBit };

std::string_view GridModeName(GridMode mode);
absl::StatusOr<GridMode> ParseGridMode(std::string_view name);

struct GridProtocolConfig {
  int k = 8;
  int h = 1;
  double epsilon = 1.0;
  GridMode mode = GridMode::kLaplacePerPoint;
  std::size_t grid_cap = kDefaultGridCap;
  MinimizeOptions minimize;
};

// Per-player privacy spend, summed over every release the player makes.
class BudgetLedger {
 public:
  explicit BudgetLedger(std::size_t players) : spent_(players, 0.0) {}

  void Charge(std::size_t player, double epsilon) { spent_[player] += epsilon; }
  double Spent(std::size_t player) const { return spent_[player]; }
  double MaxSpent() const;
  double MinSpent() const;

 private:
  std::vector<double> spent_;
};

struct GridMechanismResult {
  polyapprox::BernsteinOperatorSpec spec;
  std::vector<double> grid_values;
  MinimizeResult minimum;  // w_priv and the surrogate value there
  double max_epsilon_per_player = 0.0;
  double bits_per_player = 0.0;
  std::size_t clipped_losses = 0;
  RunNotes notes;
};

// Private grid values only (no fit). `ledger` and `transcript` may be null.
absl::StatusOr<std::vector<double>> LaplaceGridValues(
    const CubeDataset& data, const GridProtocolConfig& config, const Rng& rng,
    BudgetLedger* ledger, Transcript* transcript);
absl::StatusOr<std::vector<double>> OneBitGridValues(
    const CubeDataset& data, const GridProtocolConfig& config, const Rng& rng,
    BudgetLedger* ledger, Transcript* transcript, RunNotes* notes);

absl::StatusOr<GridMechanismResult> RunGridMechanism(
    const CubeDataset& data, const GridProtocolConfig& config,
    const Constraint& constraint, const Rng& rng,
    Transcript* transcript = nullptr);

// Random partition of [n] into `cells` near-equal blocks (seeded
// Fisher-Yates, then contiguous blocks). A partition with an empty cell is
// re-drawn once; a second failure is an error.
absl::StatusOr<std::vector<std::vector<std::size_t>>> RandomPartition(
    std::size_t n, std::size_t cells, const Rng& rng);

// Heuristic grid resolution
// k = (sqrt(p n) epsilon / (2^((h+1)p) sqrt(log(1/beta))))^(1/(h+p)), with the
// unknown smoothness constant taken as 1. At least 1.
int RecommendedK(std::size_t n, int p, int h, double epsilon, double beta);

}  // namespace ldp::bernstein_erm

#endif  // LDP_BERNSTEIN_ERM_MECHANISM_H_
