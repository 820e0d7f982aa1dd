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


// Player-side encoding for the linear-model mechanisms. Each player sends
// d(d+1) + 1 noisy copies of (x_i, y_i): a head copy with noise variance
// 32 log(1.25/delta) / epsilon^2 and d(d+1) body copies with variance
// 8 log(1.25/delta) d^2 (d+1)^2 / epsilon^2.

#ifndef LDP_GLM_ERM_REPLICA_H_
#define LDP_GLM_ERM_REPLICA_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ldp/primitives/privacy_budget.h"
#include "ldp/primitives/rng.h"
#include "ldp/primitives/transcript.h"

namespace ldp::glm_erm {

struct ReplicaNoise {
  double head_std = 0.0;
  double body_std = 0.0;
};

// Requires delta > 0 and d >= 1.
absl::StatusOr<ReplicaNoise> ReplicaNoiseFor(const PrivacyBudget& budget,
                                             int d);

// d(d+1) + 1.
std::size_t ReplicaCount(int d);

struct ReplicaMessage {
  int d = 1;
  std::size_t p = 0;
  // ReplicaCount(d) rows of p entries; row 0 is the head copy.
  std::vector<double> x;
  std::vector<double> y;

  std::size_t num_replicas() const { return y.size(); }
  std::span<const double> x_row(std::size_t j) const {
    return {x.data() + j * p, p};
  }
  std::size_t num_reals() const { return x.size() + y.size(); }
};

// Adds fresh Gaussian noise to every copy. With `add_noise` false the copies
// equal the record (privacy off).
absl::StatusOr<ReplicaMessage> GlmPlayerEncode(std::span<const double> x,
                                               double y,
                                               const PrivacyBudget& budget,
                                               int d, bool add_noise, Rng& rng);

// One factor of a Bernstein term: term j of the sum, which product it feeds
// (the t-side power or the (1 - .) side), and the replica row it consumes.
struct ReplicaFactor {
  int term = 0;
  bool t_side = true;
  std::size_t replica = 0;
};

// Term j uses rows jd+1 .. jd+j on the t side and jd+j+1 .. jd+d on the
// other side, so rows 1 .. d(d+1) are each used exactly once.
std::vector<ReplicaFactor> ReplicaPlan(int d);

// Checks that each body row is consumed at most once and row 0 never.
absl::Status CheckReplicaPlan(std::span<const ReplicaFactor> plan, int d);

}  // namespace ldp::glm_erm

#endif  // LDP_GLM_ERM_REPLICA_H_
