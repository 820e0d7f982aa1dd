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


// Server-side stochastic gradients built from replica messages. Each
// Bernstein term is a product of affine functions of y_k <w, x_k> over
// distinct replicas, so independent noise makes the product unbiased for
// the noise-free polynomial.

#ifndef LDP_GLM_ERM_GRADIENT_ORACLE_H_
#define LDP_GLM_ERM_GRADIENT_ORACLE_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ldp/glm_erm/linear_loss.h"
#include "ldp/glm_erm/replica.h"
#include "ldp/polyapprox/bernstein.h"
#include "ldp/polyapprox/smoothed_plus.h"
#include "ldp/polyapprox/subgradient_sampler.h"
#include "ldp/primitives/rng.h"

namespace ldp::glm_erm {

// How kink locations s are drawn for the general path. kShared uses one s
// per gradient sample for every factor; kPerFactor draws one s per replica.
enum class QSampling { kShared, kPerFactor };

const char* QSamplingName(QSampling mode);
absl::StatusOr<QSampling> ParseQSampling(std::string_view name);

// sum_j c_j C(d, j) prod_{t side} tau_k prod_{other side} (1 - tau_k).
double BernsteinProductSum(const polyapprox::BernsteinPolynomial& poly,
                           std::span<const ReplicaFactor> plan,
                           std::span<const double> tau);

class HingeGradient {
 public:
  // Degree-d Bernstein fit of f'_beta on [lo, hi]; arguments y <w, x> are
  // mapped to tau = (u - lo) / (hi - lo).
  static absl::StatusOr<HingeGradient> Create(double beta_smoothing, int d,
                                              double lo = -1.0,
                                              double hi = 1.0);

  int degree() const { return poly_.degree(); }
  const polyapprox::BernsteinPolynomial& polynomial() const { return poly_; }
  const polyapprox::SmoothedPlus& smoothed() const { return f_; }

  absl::Status Sample(std::span<const double> w, const ReplicaMessage& message,
                      std::span<double> out) const;

  // P_d(y <w, x>) y x.
  void PlugIn(std::span<const double> w, std::span<const double> x, double y,
              std::span<double> out) const;
  // f'_beta(y <w, x>) y x.
  void Smoothed(std::span<const double> w, std::span<const double> x,
                double y, std::span<double> out) const;

 private:
  HingeGradient(polyapprox::SmoothedPlus f, polyapprox::BernsteinPolynomial poly)
      : f_(f), poly_(std::move(poly)), plan_(ReplicaPlan(poly_.degree())) {}

  polyapprox::SmoothedPlus f_;
  polyapprox::BernsteinPolynomial poly_;
  std::vector<ReplicaFactor> plan_;
};

// f(theta) = (D/2) E|theta - s| + (f'(1) + f'(-1))/2 theta + c with
// D = f'(1) - f'(-1) and s ~ Q. Replacing |z| by 2 h_beta(z) - z gives the
// gradient D E[h'_beta(theta - s)] + f'(-1); h'_beta is evaluated at
// (theta - s) / 2 so its argument stays in [-1, 1], and the fit is on
// [lo, hi] in that variable.
class GeneralLinearGradient {
 public:
  static absl::StatusOr<GeneralLinearGradient> Create(
      LinearLoss loss, double beta_smoothing, int d, double lo = -1.0,
      double hi = 1.0, QSampling mode = QSampling::kShared);

  bool affine() const { return !sampler_.has_value(); }
  double lower_slope() const { return lower_slope_; }
  double upper_slope() const { return upper_slope_; }
  int degree() const { return poly_.degree(); }
  QSampling mode() const { return mode_; }
  const polyapprox::BernsteinPolynomial& polynomial() const { return poly_; }
  const polyapprox::SubgradientSampler* sampler() const {
    return sampler_ ? &*sampler_ : nullptr;
  }

  absl::Status Sample(std::span<const double> w, const ReplicaMessage& message,
                      Rng& rng, std::span<double> out) const;
  // With given kink draws: one value for kShared, d(d+1) values (replica
  // k uses s[k - 1]) for kPerFactor.
  absl::Status SampleWithKinks(std::span<const double> w,
                               const ReplicaMessage& message,
                               std::span<const double> s,
                               std::span<double> out) const;

 private:
  GeneralLinearGradient(LinearLoss loss, double lower, double upper,
                        std::optional<polyapprox::SubgradientSampler> sampler,
                        polyapprox::BernsteinPolynomial poly, QSampling mode)
      : loss_(std::move(loss)),
        lower_slope_(lower),
        upper_slope_(upper),
        sampler_(std::move(sampler)),
        poly_(std::move(poly)),
        plan_(ReplicaPlan(poly_.degree())),
        mode_(mode) {}

  LinearLoss loss_;
  double lower_slope_;
  double upper_slope_;
  std::optional<polyapprox::SubgradientSampler> sampler_;
  polyapprox::BernsteinPolynomial poly_;
  std::vector<ReplicaFactor> plan_;
  QSampling mode_;
};

}  // namespace ldp::glm_erm

#endif  // LDP_GLM_ERM_GRADIENT_ORACLE_H_
