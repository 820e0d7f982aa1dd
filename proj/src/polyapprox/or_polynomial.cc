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


#include "ldp/polyapprox/or_polynomial.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "ldp/polyapprox/chebyshev.h"

namespace ldp::polyapprox {
namespace {

constexpr int kMaxDegree = 512;

// Coefficients of T_d(scale * x + offset) in x, lowest degree first.
std::vector<double> ComposedChebyshev(int d, double scale, double offset) {
  std::vector<double> prev = {1.0};
  if (d == 0) return prev;
  std::vector<double> cur = {offset, scale};
  for (int i = 1; i < d; ++i) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      next[j] += 2.0 * offset * cur[j];
      next[j + 1] += 2.0 * scale * cur[j];
    }
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

absl::StatusOr<OrPolynomial> OrPolynomial::Build(int k, double gamma) {
  if (k < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("OR polynomial needs k >= 1, got %d", k));
  }
  if (!(gamma > 0 && gamma < 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("gamma must lie in (0, 1), got %g", gamma));
  }
  double scale = 1.0;
  double offset = -1.0;
  int degree = 1;
  if (k >= 2) {
    scale = 2.0 / (k - 1);
    offset = -static_cast<double>(k + 1) / (k - 1);
    while (std::fabs(ChebyshevT(degree, offset)) < 1.0 / gamma) {
      if (++degree > kMaxDegree) {
        return absl::ResourceExhaustedError(absl::StrFormat(
            "OR polynomial degree exceeds %d for k=%d gamma=%g", kMaxDegree,
            k, gamma));
      }
    }
  }
  const double denominator = ChebyshevT(degree, offset);
  std::vector<double> coefficients = ComposedChebyshev(degree, scale, offset);
  for (double& c : coefficients) c = -c / denominator;
  coefficients[0] = 0.0;
  return OrPolynomial(k, gamma, degree, scale, offset, denominator,
                      std::move(coefficients));
}

double OrPolynomial::MaxAbsCoefficient() const {
  double worst = 0.0;
  for (double c : coefficients_) worst = std::max(worst, std::fabs(c));
  return worst;
}

double OrPolynomial::Evaluate(double x) const {
  return 1.0 - ChebyshevT(degree_, scale_ * x + offset_) / denominator_;
}

double OrPolynomial::EvaluateMonomial(double x) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double OrPolynomial::MaxErrorOnSupport() const {
  double worst = 0.0;
  for (int j = 1; j <= k_; ++j) {
    worst = std::max(worst, std::fabs(Evaluate(j) - 1.0));
  }
  return worst;
}

}  // namespace ldp::polyapprox
