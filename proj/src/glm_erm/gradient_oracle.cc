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


#include "ldp/glm_erm/gradient_oracle.h"

#include <cmath>
#include <string>

#include "absl/strings/str_format.h"
#include "ldp/base/status_macros.h"
#include "ldp/kernels/kernels.h"

namespace ldp::glm_erm {
namespace {

using polyapprox::Binomial;

absl::Status CheckMessage(std::span<const double> w,
                          const ReplicaMessage& message, int d,
                          std::span<double> out) {
  if (message.d != d || message.num_replicas() != ReplicaCount(d) ||
      message.x.size() != message.num_replicas() * message.p) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "protocol error: message has %d replicas for degree %d, expected %d",
        message.num_replicas(), message.d, ReplicaCount(d)));
  }
  if (w.size() != message.p || out.size() != message.p) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "dimension mismatch: w has %d entries, message %d, output %d",
        w.size(), message.p, out.size()));
  }
  return absl::OkStatus();
}

void ScaleHead(double scalar, const ReplicaMessage& message,
               std::span<double> out) {
  const double factor = scalar * message.y[0];
  std::span<const double> head = message.x_row(0);
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = factor * head[c];
}

}  // namespace

const char* QSamplingName(QSampling mode) {
  return mode == QSampling::kShared ? "shared" : "per_factor";
}

absl::StatusOr<QSampling> ParseQSampling(std::string_view name) {
  if (name == "shared") return QSampling::kShared;
  if (name == "per_factor") return QSampling::kPerFactor;
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown Q sampling mode '%s' (shared|per_factor)", std::string(name)));
}

double BernsteinProductSum(const polyapprox::BernsteinPolynomial& poly,
                           std::span<const ReplicaFactor> plan,
                           std::span<const double> tau) {
  const int d = poly.degree();
  std::vector<double> term(d + 1, 1.0);
  for (const ReplicaFactor& f : plan) {
    const double t = tau[f.replica];
    term[f.term] *= f.t_side ? t : 1.0 - t;
  }
  double sum = 0.0;
  for (int j = 0; j <= d; ++j) {
    sum += poly.coefficients()[j] * Binomial(d, j) * term[j];
  }
  return sum;
}

absl::StatusOr<HingeGradient> HingeGradient::Create(double beta_smoothing,
                                                    int d, double lo,
                                                    double hi) {
  ASSIGN_OR_RETURN(const polyapprox::SmoothedPlus f,
                   polyapprox::SmoothedPlus::Create(beta_smoothing));
  if (d < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Bernstein degree must be >= 1, got %d", d));
  }
  ASSIGN_OR_RETURN(polyapprox::BernsteinPolynomial poly,
                   polyapprox::BernsteinDerivCoeffs(f, d, lo, hi));
  return HingeGradient(f, std::move(poly));
}

absl::Status HingeGradient::Sample(std::span<const double> w,
                                   const ReplicaMessage& message,
                                   std::span<double> out) const {
  RETURN_IF_ERROR(CheckMessage(w, message, degree(), out));
  std::vector<double> tau(message.num_replicas(), 0.0);
  for (std::size_t k = 1; k < tau.size(); ++k) {
    tau[k] = poly_.ToUnit(message.y[k] * kernels::Dot(w, message.x_row(k)));
  }
  ScaleHead(BernsteinProductSum(poly_, plan_, tau), message, out);
  return absl::OkStatus();
}

void HingeGradient::PlugIn(std::span<const double> w,
                           std::span<const double> x, double y,
                           std::span<double> out) const {
  const double scalar = poly_.Evaluate(y * kernels::Dot(w, x)) * y;
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = scalar * x[c];
}

void HingeGradient::Smoothed(std::span<const double> w,
                             std::span<const double> x, double y,
                             std::span<double> out) const {
  const double scalar = f_.Deriv(y * kernels::Dot(w, x)) * y;
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = scalar * x[c];
}

absl::StatusOr<GeneralLinearGradient> GeneralLinearGradient::Create(
    LinearLoss loss, double beta_smoothing, int d, double lo, double hi,
    QSampling mode) {
  if (!loss.value || !loss.deriv) {
    return absl::InvalidArgumentError("loss needs a value and a derivative");
  }
  if (d < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Bernstein degree must be >= 1, got %d", d));
  }
  ASSIGN_OR_RETURN(const polyapprox::HBeta h,
                   polyapprox::HBeta::Create(beta_smoothing));
  ASSIGN_OR_RETURN(polyapprox::BernsteinPolynomial poly,
                   polyapprox::BernsteinDerivCoeffs(h, d, lo, hi));
  const double lower = loss.deriv(-1.0);
  const double upper = loss.deriv(1.0);
  if (!(std::fabs(lower) <= 1 && std::fabs(upper) <= 1) || lower > upper) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "loss '%s' is not convex 1-Lipschitz on [-1, 1] (f'(-1)=%g, f'(1)=%g)",
        loss.name, lower, upper));
  }
  std::optional<polyapprox::SubgradientSampler> sampler;
  if (lower != upper) {
    ASSIGN_OR_RETURN(polyapprox::SubgradientSampler s,
                     polyapprox::SubgradientSampler::Create(loss.deriv));
    sampler = std::move(s);
  }
  return GeneralLinearGradient(std::move(loss), lower, upper,
                               std::move(sampler), std::move(poly), mode);
}

absl::Status GeneralLinearGradient::Sample(std::span<const double> w,
                                           const ReplicaMessage& message,
                                           Rng& rng,
                                           std::span<double> out) const {
  if (affine()) return SampleWithKinks(w, message, {}, out);
  const std::size_t draws =
      mode_ == QSampling::kShared ? 1 : message.num_replicas() - 1;
  std::vector<double> s(draws);
  for (double& v : s) v = sampler_->Sample(rng);
  return SampleWithKinks(w, message, s, out);
}

absl::Status GeneralLinearGradient::SampleWithKinks(
    std::span<const double> w, const ReplicaMessage& message,
    std::span<const double> s, std::span<double> out) const {
  RETURN_IF_ERROR(CheckMessage(w, message, degree(), out));
  if (affine()) {
    ScaleHead(lower_slope_, message, out);
    return absl::OkStatus();
  }
  const std::size_t body = message.num_replicas() - 1;
  const std::size_t expected = mode_ == QSampling::kShared ? 1 : body;
  if (s.size() != expected) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "got %d kink draws, expected %d", s.size(), expected));
  }
  std::vector<double> tau(message.num_replicas(), 0.0);
  for (std::size_t k = 1; k <= body; ++k) {
    const double kink = mode_ == QSampling::kShared ? s[0] : s[k - 1];
    const double theta = message.y[k] * kernels::Dot(w, message.x_row(k));
    tau[k] = poly_.ToUnit((theta - kink) / 2);
  }
  const double sum = BernsteinProductSum(poly_, plan_, tau);
  ScaleHead((upper_slope_ - lower_slope_) * sum + lower_slope_, message, out);
  return absl::OkStatus();
}

}  // namespace ldp::glm_erm
