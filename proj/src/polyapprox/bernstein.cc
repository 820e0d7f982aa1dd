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

#include "ldp/polyapprox/bernstein.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "ldp/base/status_macros.h"
#include "ldp/kernels/kernels.h"

namespace ldp::polyapprox {

double Binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r < 9e15 ? std::round(r) : r;
}

absl::StatusOr<double> BernsteinBasis(int v, int k, double x) {
  if (k < 0 || v < 0 || v > k) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Bernstein index v=%d outside [0, k=%d]", v, k));
  }
  if (!(x >= 0 && x <= 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Bernstein argument %g outside [0, 1]", x));
  }
  return Binomial(k, v) * std::pow(x, v) * std::pow(1.0 - x, k - v);
}

void BernsteinBasisAll(int k, double x, std::span<double> out) {
  // Triangular recurrence b_{v,m} = (1 - x) b_{v,m-1} + x b_{v-1,m-1};
  // stable for any k, unlike the closed form.
  const double y = 1.0 - x;
  out[0] = 1.0;
  for (int m = 1; m <= k; ++m) {
    out[m] = x * out[m - 1];
    for (int v = m - 1; v >= 1; --v) out[v] = y * out[v] + x * out[v - 1];
    out[0] *= y;
  }
}

void BernsteinBasisDerivAll(int k, double x, std::span<double> out) {
  if (k == 0) {
    out[0] = 0.0;
    return;
  }
  std::vector<double> lower(k);
  BernsteinBasisAll(k - 1, x, lower);
  for (int v = 0; v <= k; ++v) {
    const double left = v >= 1 ? lower[v - 1] : 0.0;
    const double right = v <= k - 1 ? lower[v] : 0.0;
    out[v] = k * (left - right);
  }
}

absl::Status BernsteinOperatorSpec::Validate() const {
  if (k < 1 || h < 1 || p < 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "Bernstein operator needs k, h, p >= 1; got k=%d h=%d p=%d", k, h, p));
  }
  if (NumGridPoints() == 0) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "(k+1)^p is too large for k=%d p=%d", k, p));
  }
  return absl::OkStatus();
}

std::size_t BernsteinOperatorSpec::NumGridPoints() const {
  constexpr std::size_t kLimit = std::size_t{1} << 40;
  std::size_t count = 1;
  for (int a = 0; a < p; ++a) {
    count *= static_cast<std::size_t>(k + 1);
    if (count > kLimit) return 0;
  }
  return count;
}

absl::StatusOr<IteratedBernsteinOperator> IteratedBernsteinOperator::Create(
    const BernsteinOperatorSpec& spec) {
  RETURN_IF_ERROR(spec.Validate());
  const int k = spec.k;
  const std::size_t m = static_cast<std::size_t>(k + 1);
  // M[u][v] = b_{v,k}(u/k).
  std::vector<double> mat(m * m);
  for (int u = 0; u <= k; ++u) {
    BernsteinBasisAll(k, static_cast<double>(u) / k,
                      std::span<double>(mat.data() + u * m, m));
  }
  std::vector<double> s(m * m, 0.0);
  std::vector<double> power(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) power[i * m + i] = 1.0;
  std::vector<double> next(m * m);
  for (int i = 1; i <= spec.h; ++i) {
    const double coef = Binomial(spec.h, i) * (i % 2 == 1 ? 1.0 : -1.0);
    for (std::size_t e = 0; e < m * m; ++e) s[e] += coef * power[e];
    if (i == spec.h) break;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        double acc = 0.0;
        for (std::size_t t = 0; t < m; ++t) acc += power[r * m + t] * mat[t * m + c];
        next[r * m + c] = acc;
      }
    }
    power.swap(next);
  }
  std::vector<double> s_transpose(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) s_transpose[c * m + r] = s[r * m + c];
  }
  return IteratedBernsteinOperator(spec, std::move(s_transpose),
                                   spec.NumGridPoints());
}

void IteratedBernsteinOperator::Weights1d(double x, std::span<double> out) const {
  const std::size_t m = static_cast<std::size_t>(spec_.k + 1);
  std::vector<double> basis(m);
  BernsteinBasisAll(spec_.k, x, basis);
  kernels::Gemv(s_transpose_, m, m, basis, out);
}

void IteratedBernsteinOperator::DerivWeights1d(double x,
                                               std::span<double> out) const {
  const std::size_t m = static_cast<std::size_t>(spec_.k + 1);
  std::vector<double> basis(m);
  BernsteinBasisDerivAll(spec_.k, x, basis);
  kernels::Gemv(s_transpose_, m, m, basis, out);
}

absl::Status IteratedBernsteinOperator::CheckInputs(
    std::span<const double> grid_values, std::span<const double> y) const {
  if (grid_values.size() != num_grid_points_) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "expected %d grid values, got %d", num_grid_points_,
        grid_values.size()));
  }
  if (y.size() != static_cast<std::size_t>(spec_.p)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "point has dimension %d, operator has p=%d", y.size(), spec_.p));
  }
  for (double c : y) {
    if (!(c >= 0 && c <= 1)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("point coordinate %g outside [0, 1]", c));
    }
  }
  return absl::OkStatus();
}

double IteratedBernsteinOperator::Contract(
    std::span<const double> values,
    std::span<const double* const> axis_weights) const {
  const std::size_t m = static_cast<std::size_t>(spec_.k + 1);
  std::size_t rows = values.size() / m;
  std::vector<double> current(values.begin(), values.end());
  std::vector<double> reduced(rows);
  for (int a = spec_.p - 1; a >= 0; --a) {
    kernels::Gemv(std::span<const double>(current.data(), rows * m), rows, m,
                  std::span<const double>(axis_weights[a], m),
                  std::span<double>(reduced.data(), rows));
    current.swap(reduced);
    if (a > 0) rows /= m;
  }
  return current[0];
}

absl::StatusOr<std::vector<double>> IteratedBernsteinOperator::Weights(
    std::span<const double> y) const {
  std::vector<double> probe(num_grid_points_, 0.0);
  RETURN_IF_ERROR(CheckInputs(probe, y));
  const std::size_t m = static_cast<std::size_t>(spec_.k + 1);
  std::vector<std::vector<double>> axis(spec_.p, std::vector<double>(m));
  for (int a = 0; a < spec_.p; ++a) Weights1d(y[a], axis[a]);
  std::vector<double> weights(num_grid_points_);
  for (std::size_t idx = 0; idx < num_grid_points_; ++idx) {
    std::size_t rest = idx;
    double w = 1.0;
    for (int a = spec_.p - 1; a >= 0; --a) {
      w *= axis[a][rest % m];
      rest /= m;
    }
    weights[idx] = w;
  }
  return weights;
}

absl::StatusOr<double> IteratedBernsteinOperator::Evaluate(
    std::span<const double> grid_values, std::span<const double> y) const {
  RETURN_IF_ERROR(CheckInputs(grid_values, y));
  const std::size_t m = static_cast<std::size_t>(spec_.k + 1);
  std::vector<double> storage(spec_.p * m);
  std::vector<const double*> axis(spec_.p);
  for (int a = 0; a < spec_.p; ++a) {
    Weights1d(y[a], std::span<double>(storage.data() + a * m, m));
    axis[a] = storage.data() + a * m;
  }
  return Contract(grid_values, axis);
}

absl::StatusOr<double> IteratedBernsteinOperator::EvaluateWithGradient(
    std::span<const double> grid_values, std::span<const double> y,
    std::span<double> gradient) const {
  RETURN_IF_ERROR(CheckInputs(grid_values, y));
  if (gradient.size() != static_cast<std::size_t>(spec_.p)) {
    return absl::InvalidArgumentError("gradient buffer has the wrong size");
  }
  const std::size_t m = static_cast<std::size_t>(spec_.k + 1);
  std::vector<double> weights(spec_.p * m), derivs(spec_.p * m);
  std::vector<const double*> axis(spec_.p);
  for (int a = 0; a < spec_.p; ++a) {
    Weights1d(y[a], std::span<double>(weights.data() + a * m, m));
    DerivWeights1d(y[a], std::span<double>(derivs.data() + a * m, m));
    axis[a] = weights.data() + a * m;
  }
  const double value = Contract(grid_values, axis);
  for (int a = 0; a < spec_.p; ++a) {
    axis[a] = derivs.data() + a * m;
    gradient[a] = Contract(grid_values, axis);
    axis[a] = weights.data() + a * m;
  }
  return value;
}

std::vector<double> IteratedBernsteinOperator::SampleGrid(
    const std::function<double(std::span<const double>)>& f) const {
  const std::size_t m = static_cast<std::size_t>(spec_.k + 1);
  std::vector<double> values(num_grid_points_);
  std::vector<double> point(spec_.p);
  for (std::size_t idx = 0; idx < num_grid_points_; ++idx) {
    std::size_t rest = idx;
    for (int a = spec_.p - 1; a >= 0; --a) {
      point[a] = static_cast<double>(rest % m) / spec_.k;
      rest /= m;
    }
    values[idx] = f(point);
  }
  return values;
}

absl::StatusOr<double> IteratedBernsteinEval(
    const std::function<double(std::span<const double>)>& f,
    const BernsteinOperatorSpec& spec, std::span<const double> y) {
  ASSIGN_OR_RETURN(const IteratedBernsteinOperator op,
                   IteratedBernsteinOperator::Create(spec));
  return op.Evaluate(op.SampleGrid(f), y);
}

absl::StatusOr<BernsteinPolynomial> BernsteinPolynomial::Create(
    std::vector<double> coefficients, double lo, double hi) {
  if (coefficients.empty()) {
    return absl::InvalidArgumentError("Bernstein polynomial needs a coefficient");
  }
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("invalid interval [%g, %g]", lo, hi));
  }
  return BernsteinPolynomial(std::move(coefficients), lo, hi);
}

absl::StatusOr<BernsteinPolynomial> BernsteinPolynomial::Interpolate(
    const std::function<double(double)>& g, int degree, double lo, double hi) {
  if (degree < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Bernstein degree must be >= 1, got %d", degree));
  }
  std::vector<double> c(degree + 1);
  for (int j = 0; j <= degree; ++j) {
    c[j] = g(lo + (hi - lo) * static_cast<double>(j) / degree);
  }
  return Create(std::move(c), lo, hi);
}

double BernsteinPolynomial::Evaluate(double u) const {
  const double t = ToUnit(u);
  std::vector<double> b = coefficients_;
  for (std::size_t r = 1; r < b.size(); ++r) {
    for (std::size_t j = 0; j + r < b.size(); ++j) {
      b[j] = (1.0 - t) * b[j] + t * b[j + 1];
    }
  }
  return b[0];
}

double BernsteinPolynomial::SupError(const std::function<double(double)>& g,
                                     int grid_points) const {
  double worst = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double u = lo_ + (hi_ - lo_) * i / (grid_points - 1);
    worst = std::max(worst, std::fabs(Evaluate(u) - g(u)));
  }
  return worst;
}

}  // namespace ldp::polyapprox
