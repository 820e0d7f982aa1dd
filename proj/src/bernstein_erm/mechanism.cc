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


#include "ldp/bernstein_erm/mechanism.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "absl/strings/str_format.h"
#include "ldp/base/status_macros.h"
#include "ldp/primitives/ldp_avg.h"
#include "ldp/primitives/onebit.h"
#include "ldp/primitives/privacy_budget.h"

namespace ldp::bernstein_erm {
namespace {

absl::Status ValidateConfig(const CubeDataset& data,
                            const GridProtocolConfig& config) {
  if (config.h < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("operator order h must be >= 1, got %d", config.h));
  }
  return PrivacyBudget::Create(config.epsilon).status();
}

}  // namespace

std::string_view GridModeName(GridMode mode) {
  return mode == GridMode::kOneBit ? "onebit" : "laplace";
}

absl::StatusOr<GridMode> ParseGridMode(std::string_view name) {
  if (name == "laplace") return GridMode::kLaplacePerPoint;
  if (name == "onebit") return GridMode::kOneBit;
  return absl::InvalidArgumentError(
      absl::StrFormat("unknown grid mode '%s' (laplace|onebit)", std::string(name)));
}

double BudgetLedger::MaxSpent() const {
  return spent_.empty() ? 0.0 : *std::max_element(spent_.begin(), spent_.end());
}

double BudgetLedger::MinSpent() const {
  return spent_.empty() ? 0.0 : *std::min_element(spent_.begin(), spent_.end());
}

absl::StatusOr<std::vector<double>> LaplaceGridValues(
    const CubeDataset& data, const GridProtocolConfig& config, const Rng& rng,
    BudgetLedger* ledger, Transcript* transcript) {
  RETURN_IF_ERROR(ValidateConfig(data, config));
  ASSIGN_OR_RETURN(const auto points,
                   GridPoints(config.k, static_cast<int>(data.p()),
                              config.grid_cap));
  ASSIGN_OR_RETURN(const PrivacyBudget total, PrivacyBudget::Create(config.epsilon));
  ASSIGN_OR_RETURN(const PrivacyBudget per_point,
                   total.SplitEvenly(static_cast<double>(points.size())));
  const std::size_t n = data.n();
  std::vector<double> losses(n);
  std::vector<double> grid_values(points.size());
  for (std::size_t g = 0; g < points.size(); ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      losses[i] = data.ClippedLoss(points[g], i);
      if (ledger != nullptr) ledger->Charge(i, per_point.epsilon());
    }
    ASSIGN_OR_RETURN(grid_values[g],
                     LdpAvg1d(losses, 1.0, per_point,
                              rng.Split(rng_tags::kGridLaplace, g), transcript));
  }
  return grid_values;
}

absl::StatusOr<std::vector<std::vector<std::size_t>>> RandomPartition(
    std::size_t n, std::size_t cells, const Rng& rng) {
  if (cells == 0) return absl::InvalidArgumentError("need at least one cell");
  for (std::uint64_t attempt = 0; attempt < 2; ++attempt) {
    Rng shuffler = rng.Split(rng_tags::kPartition, attempt);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = shuffler.UniformInt(i);
      std::swap(perm[i - 1], perm[j]);
    }
    std::vector<std::vector<std::size_t>> out(cells);
    bool empty = false;
    for (std::size_t c = 0; c < cells; ++c) {
      const std::size_t begin = c * n / cells;
      const std::size_t end = (c + 1) * n / cells;
      if (begin == end) empty = true;
      out[c].assign(perm.begin() + begin, perm.begin() + end);
    }
    if (!empty) return out;
  }
  return absl::FailedPreconditionError(absl::StrFormat(
      "random partition of n=%d players into %d cells left a cell empty "
      "twice (partition stream key %#x); use fewer grid points or more "
      "players",
      n, cells, rng.key()));
}

absl::StatusOr<std::vector<double>> OneBitGridValues(
    const CubeDataset& data, const GridProtocolConfig& config, const Rng& rng,
    BudgetLedger* ledger, Transcript* transcript, RunNotes* notes) {
  RETURN_IF_ERROR(ValidateConfig(data, config));
  ASSIGN_OR_RETURN(const PrivacyBudget budget, PrivacyBudget::Create(config.epsilon));
  RETURN_IF_ERROR(budget.RequireOneBitRegime());
  const int p = static_cast<int>(data.p());
  ASSIGN_OR_RETURN(const auto points, GridPoints(config.k, p, config.grid_cap));
  const std::size_t n = data.n();
  const double cells = static_cast<double>(points.size());
  const double threshold = p * cells * std::log(config.k + 1.0);
  if (static_cast<double>(n) < threshold) {
    Warn(notes, absl::StrFormat(
                    "onebit: n=%d is below p (k+1)^p log(k+1) = %.1f; cell "
                    "estimates will be noisy",
                    n, threshold));
  }
  ASSIGN_OR_RETURN(const auto partition, RandomPartition(n, points.size(), rng));
  Rng public_seed_stream = rng.Split(rng_tags::kOneBitPublic, 0);
  ASSIGN_OR_RETURN(const PublicRandomness publics,
                   PublicRandomness::Create(public_seed_stream(), budget));

  std::vector<std::uint8_t> bits(n, 0);
  for (std::size_t g = 0; g < points.size(); ++g) {
    for (std::size_t i : partition[g]) {
      const double v = data.ClippedLoss(points[g], i);
      Rng player = rng.Split(rng_tags::kOneBitPlayer, i);
      ASSIGN_OR_RETURN(const OneBitMessage message,
                       OneBitEncode(v, publics.Draw(i), budget, player));
      bits[i] = static_cast<std::uint8_t>(message.bit);
      if (ledger != nullptr) ledger->Charge(i, budget.epsilon());
      if (transcript != nullptr) transcript->RecordBit(i, message.bit);
    }
  }
  std::vector<double> grid_values(points.size());
  for (std::size_t g = 0; g < points.size(); ++g) {
    ASSIGN_OR_RETURN(grid_values[g], OneBitDecode(bits, publics, partition[g]));
  }
  return grid_values;
}

absl::StatusOr<GridMechanismResult> RunGridMechanism(
    const CubeDataset& data, const GridProtocolConfig& config,
    const Constraint& constraint, const Rng& rng, Transcript* transcript) {
  if (constraint.p() != static_cast<int>(data.p())) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "constraint has dimension %d, data has p=%d", constraint.p(),
        data.p()));
  }
  GridMechanismResult result;
  BudgetLedger ledger(data.n());
  Transcript counts(/*keep_entries=*/false);
  Transcript* sink = transcript != nullptr ? transcript : &counts;
  const std::size_t clipped_before = data.clipped_count();
  if (config.mode == GridMode::kLaplacePerPoint) {
    ASSIGN_OR_RETURN(result.grid_values,
                     LaplaceGridValues(data, config, rng, &ledger, sink));
  } else {
    ASSIGN_OR_RETURN(result.grid_values,
                     OneBitGridValues(data, config, rng, &ledger, sink,
                                      &result.notes));
  }
  result.clipped_losses = data.clipped_count() - clipped_before;
  if (result.clipped_losses > 0) {
    result.notes.Warn(absl::StrFormat("%d loss values clipped to [0, 1]",
                                      result.clipped_losses));
  }
  result.max_epsilon_per_player = ledger.MaxSpent();
  result.bits_per_player = sink->BitsPerPlayer();
  result.spec = {config.k, config.h, static_cast<int>(data.p())};
  ASSIGN_OR_RETURN(const BernsteinModel model,
                   BernsteinModel::Create(result.spec, result.grid_values));
  result.minimum = MinimizeModel(model, constraint, config.minimize);
  return result;
}

int RecommendedK(std::size_t n, int p, int h, double epsilon, double beta) {
  const double num = std::sqrt(static_cast<double>(p) * n) * epsilon;
  const double den = std::pow(2.0, (h + 1.0) * p) * std::sqrt(std::log(1.0 / beta));
  const double k = std::pow(num / den, 1.0 / (h + p));
  return std::max(1, static_cast<int>(std::lround(k)));
}

}  // namespace ldp::bernstein_erm
