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


// Non-interactive private ERM for generalized linear losses: players send
// replica messages once, the server runs SIGM on unbiased polynomial
// gradient estimates built from them.

#ifndef LDP_GLM_ERM_GLM_ERM_H_
#define LDP_GLM_ERM_GLM_ERM_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/glm_erm/ball_dataset.h"
#include "ldp/glm_erm/gradient_oracle.h"
#include "ldp/glm_erm/linear_loss.h"
#include "ldp/primitives/rng.h"
#include "ldp/primitives/run_notes.h"
#include "ldp/primitives/transcript.h"
#include "ldp/sigm/sigm.h"

namespace ldp::glm_erm {

enum class GlmFlavor { kHinge, kGeneralLinear };

const char* GlmFlavorName(GlmFlavor flavor);
absl::StatusOr<GlmFlavor> ParseGlmFlavor(std::string_view name);

// ceil(2 / (beta^2 alpha)).
int TheoreticalDegree(double alpha, double beta_smoothing);

struct BaselineResult {
  std::vector<double> w;
  double risk = 0.0;
};

// Full-batch projected subgradient on {||w|| <= radius}, step
// radius / sqrt(t + 1). Returns the better of the averaged and the best
// visited iterate.
BaselineResult ProjectedSubgradientBaseline(const BallDataset& data,
                                            const LinearLoss& loss,
                                            double radius, int iterations);

struct GlmErmConfig {
  GlmFlavor flavor = GlmFlavor::kHinge;
  // Loss for the general flavor. The hinge flavor always uses HingeLoss().
  LinearLoss loss = HingeLoss();
  double target_alpha = 0.5;
  // 0 means target_alpha / 4.
  double beta_smoothing = 0.0;
  // 0 means min(max_degree, TheoreticalDegree).
  int degree = 0;
  int max_degree = 8;
  double epsilon = 1.0;
  double delta = 1e-5;
  // False encodes replicas without noise.
  bool add_noise = true;
  double interval_lo = -1.0;
  double interval_hi = 1.0;
  QSampling q_sampling = QSampling::kShared;
  // 0 means n.
  std::int64_t iterations = 0;
  double radius = 1.0;
  // Negative means estimate from sigma_samples gradients at w = 0.
  double sigma = -1.0;
  int sigma_samples = 2000;
  int baseline_iterations = 10000;
  // Upper bound on stored message reals across all players.
  std::size_t max_message_reals = std::size_t{1} << 27;
  // Trace every this many SIGM iterations; 0 disables.
  std::int64_t trace_every = 0;
};

struct GlmErmResult {
  std::vector<double> w;
  double empirical_risk = 0.0;
  BaselineResult baseline;
  // empirical_risk - baseline.risk.
  double excess_risk = 0.0;
  int degree = 0;
  int theoretical_degree = 0;
  double beta_smoothing = 0.0;
  double sigma = 0.0;
  std::int64_t iterations = 0;
  double reals_per_player = 0.0;
  std::vector<sigm::TraceRow> trace;
  RunNotes notes;
};

// `baseline` may be supplied when it is shared across trials on the same
// data; otherwise it is computed here.
absl::StatusOr<GlmErmResult> GlmErmRun(
    const BallDataset& data, const GlmErmConfig& config, const Rng& rng,
    Transcript* transcript = nullptr,
    const BaselineResult* baseline = nullptr);

// The loss whose empirical risk the run reports.
LinearLoss RiskLoss(const GlmErmConfig& config);

}  // namespace ldp::glm_erm

#endif  // LDP_GLM_ERM_GLM_ERM_H_
