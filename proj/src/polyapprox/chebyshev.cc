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


#include "ldp/polyapprox/chebyshev.h"

#include <cmath>
#include <numbers>

#include "absl/strings/str_format.h"

namespace ldp::polyapprox {

double ChebyshevT(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int i = 1; i < n; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double ChebyshevTTrig(int n, double x) {
  if (std::fabs(x) <= 1.0) return std::cos(n * std::acos(x));
  const double magnitude = std::cosh(n * std::acosh(std::fabs(x)));
  return (x < 0 && n % 2 == 1) ? -magnitude : magnitude;
}

std::vector<double> ChebyshevMonomialCoefficients(int n) {
  std::vector<double> prev = {1.0};
  if (n == 0) return prev;
  std::vector<double> cur = {0.0, 1.0};
  for (int i = 1; i < n; ++i) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2.0 * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double ChebyshevSeries::Evaluate(double x) const {
  double b1 = 0.0;
  double b2 = 0.0;
  for (int j = degree(); j >= 1; --j) {
    const double b0 = coefficients_[j] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coefficients_[0] + x * b1 - b2;
}

absl::StatusOr<ChebyshevSeries> ChebyshevSeriesFit(
    const std::function<double(double)>& f, int n) {
  if (n < 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Chebyshev degree must be >= 0, got %d", n));
  }
  if (n == 0) return ChebyshevSeries({f(0.0)});
  std::vector<double> values(n + 1);
  for (int j = 0; j <= n; ++j) {
    values[j] = f(std::cos(std::numbers::pi * j / n));
  }
  std::vector<double> a(n + 1);
  for (int k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double w = (j == 0 || j == n) ? 0.5 : 1.0;
      acc += w * values[j] * std::cos(std::numbers::pi * j * k / n);
    }
    a[k] = 2.0 * acc / n;
  }
  a[0] *= 0.5;
  a[n] *= 0.5;
  return ChebyshevSeries(std::move(a));
}

}  // namespace ldp::polyapprox
