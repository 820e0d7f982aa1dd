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


#include "ldp/query_release/smooth_queries.h"

#include <cmath>
#include <numbers>

#include "absl/strings/str_format.h"
#include "ldp/base/status_macros.h"
#include "ldp/kernels/kernels.h"
#include "ldp/polyapprox/chebyshev.h"
#include "ldp/primitives/privacy_budget.h"

namespace ldp::query_release {
namespace {

// table[j * t + r] = T_r(x_j).
void AxisValues(std::span<const double> x, int t, std::vector<double>& table) {
  table.resize(x.size() * static_cast<std::size_t>(t));
  for (std::size_t j = 0; j < x.size(); ++j) {
    double* row = table.data() + j * t;
    row[0] = 1.0;
    if (t > 1) row[1] = x[j];
    for (int r = 2; r < t; ++r) row[r] = 2 * x[j] * row[r - 1] - row[r - 2];
  }
}

}  // namespace

absl::StatusOr<std::size_t> SmoothBasisSize(std::size_t p, int t,
                                            std::size_t cap) {
  if (p == 0 || t < 1) return absl::InvalidArgumentError("need p >= 1, t >= 1");
  double size = 1.0;
  for (std::size_t j = 0; j < p; ++j) size *= t;
  if (size > static_cast<double>(cap)) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "t^p = %.0f basis entries for t=%d, p=%d exceeds the cap %d; lower t",
        size, t, p, cap));
  }
  return static_cast<std::size_t>(size);
}

void SmoothPlayerBasis(std::span<const double> x, int t,
                       std::span<double> out) {
  std::vector<double> axis;
  AxisValues(x, t, axis);
  out[0] = 1.0;
  std::size_t filled = 1;
  // Expand one axis at a time; earlier axes end up slowest.
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t e = filled; e-- > 0;) {
      const double base = out[e];
      for (int r = t - 1; r >= 0; --r) out[e * t + r] = base * axis[j * t + r];
    }
    filled *= t;
  }
}

absl::StatusOr<std::vector<double>> SmoothQueryCoefficients(
    const SmoothQuery& f, std::size_t p, int t, std::size_t cap) {
  ASSIGN_OR_RETURN(const std::size_t size, SmoothBasisSize(p, t, cap));
  std::vector<double> nodes(t);
  for (int m = 0; m < t; ++m) {
    nodes[m] = std::cos(std::numbers::pi * (m + 0.5) / t);
  }
  // transform[r * t + m] = (2 - [r == 0]) / t * T_r(node_m).
  std::vector<double> transform(static_cast<std::size_t>(t) * t);
  for (int r = 0; r < t; ++r) {
    for (int m = 0; m < t; ++m) {
      transform[r * t + m] =
          (r == 0 ? 1.0 : 2.0) / t * polyapprox::ChebyshevT(r, nodes[m]);
    }
  }
  std::vector<double> values(size), point(p);
  for (std::size_t flat = 0; flat < size; ++flat) {
    std::size_t rest = flat;
    for (std::size_t j = p; j-- > 0;) {
      point[j] = nodes[rest % t];
      rest /= t;
    }
    values[flat] = f(point);
  }
  // Apply the 1-d transform along each axis.
  std::vector<double> next(size), fiber(t), out_fiber(t);
  std::size_t stride = 1;
  for (std::size_t axis = p; axis-- > 0;) {
    const std::size_t block = stride * t;
    for (std::size_t outer = 0; outer < size; outer += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        for (int m = 0; m < t; ++m) fiber[m] = values[outer + m * stride + inner];
        kernels::Gemv(transform, t, t, fiber, out_fiber);
        for (int r = 0; r < t; ++r) next[outer + r * stride + inner] = out_fiber[r];
      }
    }
    values.swap(next);
    stride = block;
  }
  return values;
}

absl::StatusOr<CosineCoefficientTable> SmoothRelease(
    const BoxDataset& data, const SmoothConfig& config, const Rng& rng,
    RunNotes* notes, Transcript* transcript) {
  ASSIGN_OR_RETURN(const PrivacyBudget budget,
                   PrivacyBudget::Create(config.epsilon));
  ASSIGN_OR_RETURN(const std::size_t size,
                   SmoothBasisSize(data.p(), config.t, config.max_dimension));
  const std::size_t p = data.p();
  const int t = config.t;
  VecAvgOptions options;
  options.mode = config.mode;
  options.beta = config.beta;

  // Non-private mode asks for every coordinate of a player in turn, so the
  // axis table is cached per player.
  std::size_t cached_player = static_cast<std::size_t>(-1);
  std::vector<double> axis;
  auto source = [&](std::size_t i, std::size_t flat) {
    if (i != cached_player) {
      AxisValues(data.row(i), t, axis);
      cached_player = i;
    }
    double value = 1.0;
    std::size_t rest = flat;
    for (std::size_t j = p; j-- > 0;) {
      value *= axis[j * t + rest % t];
      rest /= t;
    }
    // Rounding in the recursion can step just past +-1.
    return std::clamp((value + 1.0) / 2.0, 0.0, 1.0);
  };
  ASSIGN_OR_RETURN(std::vector<double> avg,
                   LdpAvgVec(data.n(), size, source, 1.0, budget, rng, options,
                             notes, transcript));
  CosineCoefficientTable table;
  table.p = p;
  table.t = t;
  for (double& v : avg) v = 2.0 * v - 1.0;
  table.averages = std::move(avg);
  return table;
}

absl::StatusOr<double> AnswerSmooth(const CosineCoefficientTable& table,
                                    std::span<const double> coefficients) {
  if (coefficients.size() != table.averages.size()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "query has %d coefficients, the release has %d", coefficients.size(),
        table.averages.size()));
  }
  return kernels::Dot(coefficients, table.averages);
}

int RecommendedT(std::size_t n, double epsilon, std::size_t p, int h) {
  const double base = std::sqrt(static_cast<double>(n)) * epsilon;
  const double exponent = 2.0 / (5.0 * static_cast<double>(p) + 2.0 * h);
  return std::max(1, static_cast<int>(std::floor(std::pow(base, exponent))));
}

}  // namespace ldp::query_release
