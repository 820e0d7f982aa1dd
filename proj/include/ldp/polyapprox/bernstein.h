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

// Bernstein bases and iterated Bernstein operators on [0,1]^p.
//
// Grid values are stored flat in lexicographic order of the multi-index
// (v_1, ..., v_p), last index fastest, so entry
// sum_a v_a (k+1)^(p-1-a) holds f(v_1/k, ..., v_p/k).

#ifndef LDP_POLYAPPROX_BERNSTEIN_H_
#define LDP_POLYAPPROX_BERNSTEIN_H_

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace ldp::polyapprox {

double Binomial(int n, int k);

// C(k, v) x^v (1 - x)^(k - v).
absl::StatusOr<double> BernsteinBasis(int v, int k, double x);

// out[v] = b_{v,k}(x) for v = 0..k. No validation; out has k + 1 entries.
void BernsteinBasisAll(int k, double x, std::span<double> out);
// out[v] = d/dx b_{v,k}(x) = k (b_{v-1,k-1}(x) - b_{v,k-1}(x)).
void BernsteinBasisDerivAll(int k, double x, std::span<double> out);

struct BernsteinOperatorSpec {
  int k = 1;
  int h = 1;
  int p = 1;

  absl::Status Validate() const;
  // (k + 1)^p, or 0 when that exceeds 2^40.
  std::size_t NumGridPoints() const;
};

// B^(h)_k = I - (I - B_k)^h, applied axis by axis.
//
// Internally B^(h)_k(f; x) = b(x)^T S f with
// S = sum_{i=1..h} C(h, i) (-1)^(i-1) M^(i-1) and M[u][v] = b_{v,k}(u/k), so
// the 1-d weights are S^T b(x).
class IteratedBernsteinOperator {
 public:
  static absl::StatusOr<IteratedBernsteinOperator> Create(
      const BernsteinOperatorSpec& spec);

  const BernsteinOperatorSpec& spec() const { return spec_; }
  std::size_t num_grid_points() const { return num_grid_points_; }

  // 1-d weights at x; out has k + 1 entries.
  void Weights1d(double x, std::span<double> out) const;
  void DerivWeights1d(double x, std::span<double> out) const;

  // Full tensor weights w_v with B^(h)(f; y) = sum_v f(v/k) w_v.
  absl::StatusOr<std::vector<double>> Weights(std::span<const double> y) const;

  absl::StatusOr<double> Evaluate(std::span<const double> grid_values,
                                  std::span<const double> y) const;
  // Value plus gradient with respect to y.
  absl::StatusOr<double> EvaluateWithGradient(
      std::span<const double> grid_values, std::span<const double> y,
      std::span<double> gradient) const;

  // f sampled on the grid, for use with Evaluate.
  std::vector<double> SampleGrid(
      const std::function<double(std::span<const double>)>& f) const;

 private:
  IteratedBernsteinOperator(BernsteinOperatorSpec spec,
                            std::vector<double> s_transpose,
                            std::size_t num_grid_points)
      : spec_(spec),
        s_transpose_(std::move(s_transpose)),
        num_grid_points_(num_grid_points) {}

  absl::Status CheckInputs(std::span<const double> grid_values,
                           std::span<const double> y) const;
  // Contracts `values` (num_grid_points entries) with per-axis weight vectors.
  double Contract(std::span<const double> values,
                  std::span<const double* const> axis_weights) const;

  BernsteinOperatorSpec spec_;
  std::vector<double> s_transpose_;  // (k+1) x (k+1), row-major
  std::size_t num_grid_points_;
};

// B^(h)_k(f; y) for a callable f on [0,1]^p.
absl::StatusOr<double> IteratedBernsteinEval(
    const std::function<double(std::span<const double>)>& f,
    const BernsteinOperatorSpec& spec, std::span<const double> y);

// Bernstein-form polynomial on [lo, hi]:
// P(u) = sum_j c_j C(d, j) t^j (1 - t)^(d - j) with t = (u - lo) / (hi - lo).
class BernsteinPolynomial {
 public:
  static absl::StatusOr<BernsteinPolynomial> Create(
      std::vector<double> coefficients, double lo = 0.0, double hi = 1.0);

  // c_j = g(lo + (hi - lo) j / d), j = 0..d.
  static absl::StatusOr<BernsteinPolynomial> Interpolate(
      const std::function<double(double)>& g, int degree, double lo = 0.0,
      double hi = 1.0);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<double>& coefficients() const { return coefficients_; }

  // t = (u - lo) / (hi - lo); arguments outside [lo, hi] extrapolate.
  double ToUnit(double u) const { return (u - lo_) / (hi_ - lo_); }
  // de Casteljau.
  double Evaluate(double u) const;

  // max over `grid_points` equispaced u in [lo, hi] of |P(u) - g(u)|.
  double SupError(const std::function<double(double)>& g,
                  int grid_points = 2001) const;

 private:
  BernsteinPolynomial(std::vector<double> coefficients, double lo, double hi)
      : coefficients_(std::move(coefficients)), lo_(lo), hi_(hi) {}

  std::vector<double> coefficients_;
  double lo_;
  double hi_;
};

}  // namespace ldp::polyapprox

#endif  // LDP_POLYAPPROX_BERNSTEIN_H_
