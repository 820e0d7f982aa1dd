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


#include "ldp/glm_erm/glm_erm.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "absl/strings/str_format.h"
#include "ldp/base/status_macros.h"
#include "ldp/glm_erm/replica.h"
#include "ldp/kernels/kernels.h"
#include "ldp/primitives/privacy_budget.h"

namespace ldp::glm_erm {
namespace {

double Norm(std::span<const double> v) { return std::sqrt(kernels::Dot(v, v)); }

absl::Status Validate(const GlmErmConfig& c) {
  if (!(c.target_alpha > 0)) {
    return absl::InvalidArgumentError("target_alpha must be positive");
  }
  if (c.beta_smoothing < 0 || c.degree < 0 || c.max_degree < 1) {
    return absl::InvalidArgumentError(
        "beta_smoothing and degree must be >= 0, max_degree >= 1");
  }
  if (!(c.interval_lo < c.interval_hi)) {
    return absl::InvalidArgumentError("Bernstein interval needs lo < hi");
  }
  if (!(c.radius > 0 && c.radius <= 1)) {
    return absl::InvalidArgumentError("radius must lie in (0, 1]");
  }
  if (c.iterations < 0 || c.sigma_samples < 1 || c.baseline_iterations < 1) {
    return absl::InvalidArgumentError(
        "iterations must be >= 0, sigma_samples and baseline_iterations >= 1");
  }
  return absl::OkStatus();
}

// Both flavors behind one sampling call.
struct Sampler {
  const HingeGradient* hinge = nullptr;
  const GeneralLinearGradient* general = nullptr;

  absl::Status operator()(std::span<const double> w, const ReplicaMessage& m,
                          Rng& rng, std::span<double> out) const {
    if (hinge != nullptr) return hinge->Sample(w, m, out);
    return general->Sample(w, m, rng, out);
  }
};

}  // namespace

const char* GlmFlavorName(GlmFlavor flavor) {
  return flavor == GlmFlavor::kHinge ? "hinge" : "general-linear";
}

absl::StatusOr<GlmFlavor> ParseGlmFlavor(std::string_view name) {
  if (name == "hinge") return GlmFlavor::kHinge;
  if (name == "general-linear") return GlmFlavor::kGeneralLinear;
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown flavor '%s' (hinge|general-linear)", std::string(name)));
}

int TheoreticalDegree(double alpha, double beta_smoothing) {
  const double d = std::ceil(2.0 / (beta_smoothing * beta_smoothing * alpha));
  return d > 1e9 ? 1000000000 : static_cast<int>(d);
}

LinearLoss RiskLoss(const GlmErmConfig& config) {
  return config.flavor == GlmFlavor::kHinge ? HingeLoss() : config.loss;
}

BaselineResult ProjectedSubgradientBaseline(const BallDataset& data,
                                            const LinearLoss& loss,
                                            double radius, int iterations) {
  const std::size_t n = data.n();
  const std::size_t p = data.p();
  std::vector<double> w(p, 0.0), avg(p, 0.0), grad(p), margins(n);
  BaselineResult best{w, data.EmpiricalRisk(loss, w)};
  for (int t = 0; t < iterations; ++t) {
    data.Margins(w, margins);
    double risk = 0.0;
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      risk += loss.value(margins[i]);
      const double scale = loss.deriv(margins[i]) * data.y(i);
      if (scale != 0.0) kernels::Axpy(scale, data.x(i), grad);
    }
    risk /= static_cast<double>(n);
    if (risk < best.risk) best = {w, risk};
    const double step = radius / std::sqrt(t + 1.0) / static_cast<double>(n);
    kernels::Axpy(-step, grad, w);
    const double norm = Norm(w);
    if (norm > radius) {
      for (double& v : w) v *= radius / norm;
    }
    for (std::size_t c = 0; c < p; ++c) avg[c] += (w[c] - avg[c]) / (t + 1.0);
  }
  const double avg_risk = data.EmpiricalRisk(loss, avg);
  const double last_risk = data.EmpiricalRisk(loss, w);
  if (avg_risk < best.risk) best = {avg, avg_risk};
  if (last_risk < best.risk) best = {w, last_risk};
  return best;
}

absl::StatusOr<GlmErmResult> GlmErmRun(const BallDataset& data,
                                       const GlmErmConfig& config,
                                       const Rng& rng, Transcript* transcript,
                                       const BaselineResult* baseline) {
  RETURN_IF_ERROR(Validate(config));
  ASSIGN_OR_RETURN(const PrivacyBudget budget,
                   PrivacyBudget::Create(config.epsilon, config.delta));
  RETURN_IF_ERROR(budget.RequirePositiveDelta());

  GlmErmResult result;
  result.beta_smoothing = config.beta_smoothing > 0 ? config.beta_smoothing
                                                    : config.target_alpha / 4;
  result.theoretical_degree =
      TheoreticalDegree(config.target_alpha, result.beta_smoothing);
  result.degree = config.degree > 0
                      ? config.degree
                      : std::min(config.max_degree, result.theoretical_degree);
  if (result.degree < result.theoretical_degree) {
    result.notes.Warn(absl::StrFormat(
        "Bernstein degree %d is below the theoretical setting %d for "
        "alpha=%g, beta=%g",
        result.degree, result.theoretical_degree, config.target_alpha,
        result.beta_smoothing));
  }
  const int d = result.degree;
  const std::size_t n = data.n();
  const std::size_t p = data.p();
  const std::size_t per_player = ReplicaCount(d) * (p + 1);
  if (per_player > config.max_message_reals / n) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "storing %d players x %d reals exceeds the cap of %d; lower the "
        "degree or n",
        n, per_player, config.max_message_reals));
  }

  // Oracle first so bad loss or smoothing settings fail before encoding.
  std::optional<HingeGradient> hinge;
  std::optional<GeneralLinearGradient> general;
  Sampler sampler;
  if (config.flavor == GlmFlavor::kHinge) {
    ASSIGN_OR_RETURN(hinge, HingeGradient::Create(result.beta_smoothing, d,
                                                  config.interval_lo,
                                                  config.interval_hi));
    sampler.hinge = &*hinge;
  } else {
    ASSIGN_OR_RETURN(general,
                     GeneralLinearGradient::Create(
                         config.loss, result.beta_smoothing, d,
                         config.interval_lo, config.interval_hi,
                         config.q_sampling));
    sampler.general = &*general;
  }

  std::vector<ReplicaMessage> messages;
  messages.reserve(n);
  std::vector<double> payload;
  for (std::size_t i = 0; i < n; ++i) {
    Rng player = rng.Split(rng_tags::kGlmEncode, i);
    ASSIGN_OR_RETURN(ReplicaMessage m,
                     GlmPlayerEncode(data.x(i), data.y(i), budget, d,
                                     config.add_noise, player));
    if (transcript != nullptr) {
      payload.assign(m.x.begin(), m.x.end());
      payload.insert(payload.end(), m.y.begin(), m.y.end());
      transcript->RecordReals(i, payload);
    }
    messages.push_back(std::move(m));
  }
  result.reals_per_player = static_cast<double>(per_player);

  if (config.sigma >= 0) {
    result.sigma = config.sigma;
  } else {
    Rng probe = rng.Split(rng_tags::kGlmServer, 1);
    const std::vector<double> zero(p, 0.0);
    std::vector<double> g(p), mean(p, 0.0), second(p, 0.0);
    const int m = config.sigma_samples;
    for (int s = 0; s < m; ++s) {
      const std::size_t i = probe.UniformInt(n);
      RETURN_IF_ERROR(sampler(zero, messages[i], probe, g));
      for (std::size_t c = 0; c < p; ++c) {
        mean[c] += g[c] / m;
        second[c] += g[c] * g[c] / m;
      }
    }
    double var = 0.0;
    for (std::size_t c = 0; c < p; ++c) var += second[c] - mean[c] * mean[c];
    result.sigma = std::sqrt(std::max(0.0, var));
  }

  sigm::OracleContract contract;
  contract.gamma = config.target_alpha / 2;
  contract.beta = 1.0 / result.beta_smoothing;
  contract.sigma = result.sigma;
  ASSIGN_OR_RETURN(const sigm::SigmSchedule schedule,
                   sigm::SigmSchedule::Balanced(1.0, config.radius, contract));

  Rng server = rng.Split(rng_tags::kGlmServer, 0);
  sigm::GradientOracle oracle = [&](std::span<const double> w,
                                    std::span<double> g) {
    const std::size_t i = server.UniformInt(n);
    return sampler(w, messages[i], server, g);
  };
  const LinearLoss risk_loss = RiskLoss(config);
  sigm::SigmOptions options;
  options.iterations =
      config.iterations > 0 ? config.iterations : static_cast<std::int64_t>(n);
  if (config.trace_every > 0) {
    options.record_trace = true;
    options.trace_every = config.trace_every;
    options.objective = [&](std::span<const double> w) {
      return data.EmpiricalRisk(risk_loss, w);
    };
  }
  result.iterations = options.iterations;
  ASSIGN_OR_RETURN(sigm::SigmResult run,
                   sigm::SigmRun(oracle, p, schedule, options));
  result.w = std::move(run.y);
  result.trace = std::move(run.trace);

  result.empirical_risk = data.EmpiricalRisk(risk_loss, result.w);
  result.baseline = baseline != nullptr
                        ? *baseline
                        : ProjectedSubgradientBaseline(
                              data, risk_loss, config.radius,
                              config.baseline_iterations);
  result.excess_risk = result.empirical_risk - result.baseline.risk;
  return result;
}

}  // namespace ldp::glm_erm
