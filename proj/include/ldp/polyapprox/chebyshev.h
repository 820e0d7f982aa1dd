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


#ifndef LDP_POLYAPPROX_CHEBYSHEV_H_
#define LDP_POLYAPPROX_CHEBYSHEV_H_

#include <functional>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace ldp::polyapprox {

// T_n(x) by the three-term recursion; valid for any real x.
double ChebyshevT(int n, double x);
// cos(n acos x) on [-1, 1], cosh(n acosh |x|) with sign (-1)^n outside.
double ChebyshevTTrig(int n, double x);

// Monomial coefficients of T_n, lowest degree first.
std::vector<double> ChebyshevMonomialCoefficients(int n);

// f(x) ~ sum_{j=0..n} a_j T_j(x) on [-1, 1].
class ChebyshevSeries {
 public:
  explicit ChebyshevSeries(std::vector<double> coefficients)
      : coefficients_(std::move(coefficients)) {}

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coefficients_; }

  // Clenshaw recurrence.
  double Evaluate(double x) const;

 private:
  std::vector<double> coefficients_;
};

// Degree-n fit by cosine quadrature at the n + 1 extrema cos(pi j / n), with
// halved end terms; exact for polynomials of degree <= n. n = 0 returns the
// constant f(0).
absl::StatusOr<ChebyshevSeries> ChebyshevSeriesFit(
    const std::function<double(double)>& f, int n);

}  // namespace ldp::polyapprox

#endif  // LDP_POLYAPPROX_CHEBYSHEV_H_
