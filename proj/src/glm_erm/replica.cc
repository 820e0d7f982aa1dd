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


#include "ldp/glm_erm/replica.h"

#include <cmath>

#include "absl/strings/str_format.h"
#include "ldp/base/status_macros.h"
#include "ldp/primitives/noise.h"

namespace ldp::glm_erm {

absl::StatusOr<ReplicaNoise> ReplicaNoiseFor(const PrivacyBudget& budget,
                                             int d) {
  RETURN_IF_ERROR(budget.RequirePositiveDelta());
  if (d < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Bernstein degree must be >= 1, got %d", d));
  }
  const double log_term = std::log(1.25 / budget.delta());
  const double eps = budget.epsilon();
  const double dd = static_cast<double>(d);
  ReplicaNoise noise;
  noise.head_std = std::sqrt(32.0 * log_term) / eps;
  noise.body_std = std::sqrt(8.0 * log_term) * dd * (dd + 1) / eps;
  return noise;
}

std::size_t ReplicaCount(int d) {
  return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) + 1;
}

absl::StatusOr<ReplicaMessage> GlmPlayerEncode(std::span<const double> x,
                                               double y,
                                               const PrivacyBudget& budget,
                                               int d, bool add_noise,
                                               Rng& rng) {
  ASSIGN_OR_RETURN(const ReplicaNoise noise, ReplicaNoiseFor(budget, d));
  if (x.empty()) return absl::InvalidArgumentError("empty feature vector");
  ReplicaMessage message;
  message.d = d;
  message.p = x.size();
  const std::size_t count = ReplicaCount(d);
  message.x.resize(count * x.size());
  message.y.resize(count);
  if (!add_noise) {
    for (std::size_t j = 0; j < count; ++j) {
      std::copy(x.begin(), x.end(), message.x.begin() + j * x.size());
      message.y[j] = y;
    }
    return message;
  }
  ASSIGN_OR_RETURN(const GaussianNoise head, GaussianNoise::Create(noise.head_std));
  ASSIGN_OR_RETURN(const GaussianNoise body, GaussianNoise::Create(noise.body_std));
  for (std::size_t j = 0; j < count; ++j) {
    const GaussianNoise& g = j == 0 ? head : body;
    for (std::size_t c = 0; c < x.size(); ++c) {
      message.x[j * x.size() + c] = x[c] + g.Draw(rng);
    }
    message.y[j] = y + g.Draw(rng);
  }
  return message;
}

std::vector<ReplicaFactor> ReplicaPlan(int d) {
  std::vector<ReplicaFactor> plan;
  const std::size_t dd = static_cast<std::size_t>(d);
  for (int j = 0; j <= d; ++j) {
    const std::size_t base = static_cast<std::size_t>(j) * dd;
    for (std::size_t k = base + 1; k <= base + static_cast<std::size_t>(j); ++k) {
      plan.push_back({j, true, k});
    }
    for (std::size_t k = base + static_cast<std::size_t>(j) + 1; k <= base + dd;
         ++k) {
      plan.push_back({j, false, k});
    }
  }
  return plan;
}

absl::Status CheckReplicaPlan(std::span<const ReplicaFactor> plan, int d) {
  std::vector<int> uses(ReplicaCount(d), 0);
  for (const ReplicaFactor& f : plan) {
    if (f.replica == 0 || f.replica >= uses.size()) {
      return absl::InternalError(
          absl::StrFormat("factor uses replica %d outside 1..%d", f.replica,
                          uses.size() - 1));
    }
    if (++uses[f.replica] > 1) {
      return absl::InternalError(
          absl::StrFormat("replica %d feeds two factors", f.replica));
    }
  }
  return absl::OkStatus();
}

}  // namespace ldp::glm_erm
