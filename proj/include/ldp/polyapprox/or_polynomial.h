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


// Univariate polynomial p with p(0) = 0 and |p(j) - 1| <= gamma for
// j = 1..k, built from Chebyshev growth outside [-1, 1]:
//   m(x) = (2x - k - 1) / (k - 1) maps [1, k] onto [-1, 1],
//   p(x) = 1 - T_d(m(x)) / T_d(m(0)),
// with d the smallest degree for which |T_d(m(0))| >= 1 / gamma. For k = 1
// the map is m(x) = x - 1 and d = 1, which gives p(x) = x.

#ifndef LDP_POLYAPPROX_OR_POLYNOMIAL_H_
#define LDP_POLYAPPROX_OR_POLYNOMIAL_H_

#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace ldp::polyapprox {

class OrPolynomial {
 public:
  static absl::StatusOr<OrPolynomial> Build(int k, double gamma);

  int k() const { return k_; }
  double gamma() const { return gamma_; }
  int degree() const { return degree_; }
  // Monomial coefficients c_0..c_d; c_0 is exactly 0.
  const std::vector<double>& coefficients() const { return coefficients_; }
  double MaxAbsCoefficient() const;

  // Chebyshev form; exact zero at x = 0.
  double Evaluate(double x) const;
  // Horner on the monomial coefficients.
  double EvaluateMonomial(double x) const;

  // max_{j=1..k} |p(j) - 1|.
  double MaxErrorOnSupport() const;

 private:
  OrPolynomial(int k, double gamma, int degree, double scale, double offset,
               double denominator, std::vector<double> coefficients)
      : k_(k),
        gamma_(gamma),
        degree_(degree),
        scale_(scale),
        offset_(offset),
        denominator_(denominator),
        coefficients_(std::move(coefficients)) {}

  int k_;
  double gamma_;
  int degree_;
  double scale_;        // m(x) = scale_ * x + offset_
  double offset_;
  double denominator_;  // T_d(m(0))
  std::vector<double> coefficients_;
};

}  // namespace ldp::polyapprox

#endif  // LDP_POLYAPPROX_OR_POLYNOMIAL_H_
