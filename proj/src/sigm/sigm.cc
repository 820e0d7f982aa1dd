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


#include "ldp/sigm/sigm.h"

#include <cmath>
#include <fstream>
#include <limits>

#include "absl/strings/str_format.h"
#include "ldp/base/status_macros.h"
#include "ldp/kernels/kernels.h"

namespace ldp::sigm {
namespace {

double Norm(std::span<const double> x) { return std::sqrt(kernels::Dot(x, x)); }

}  // namespace

absl::Status OracleContract::Validate() const {
  if (!std::isfinite(gamma) || gamma < 0) {
    return absl::InvalidArgumentError("oracle gamma must be finite and >= 0");
  }
  if (!std::isfinite(beta) || beta <= 0) {
    return absl::InvalidArgumentError("oracle beta must be finite and > 0");
  }
  if (!std::isfinite(sigma) || sigma < 0) {
    return absl::InvalidArgumentError("oracle sigma must be finite and >= 0");
  }
  return absl::OkStatus();
}

absl::StatusOr<SigmSchedule> SigmSchedule::Create(
    double a, double b, double p_exponent, double radius,
    const OracleContract& oracle) {
  RETURN_IF_ERROR(oracle.Validate());
  if (!(a >= 1) || !std::isfinite(a)) {
    return absl::InvalidArgumentError(absl::StrFormat("a=%g must be >= 1", a));
  }
  if (!(b >= 0) || !std::isfinite(b)) {
    return absl::InvalidArgumentError(absl::StrFormat("b=%g must be >= 0", b));
  }
  if (!(p_exponent >= 1) || !std::isfinite(p_exponent)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("schedule exponent %g must be >= 1", p_exponent));
  }
  if (!(radius > 0 && radius <= 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("radius %g must lie in (0, 1]", radius));
  }
  return SigmSchedule(a, b, p_exponent, radius, oracle);
}

absl::StatusOr<SigmSchedule> SigmSchedule::Balanced(
    double p_exponent, double radius, const OracleContract& oracle) {
  const double p = p_exponent;
  const double a = std::pow(2.0, (p - 1) / 2);
  const double b = std::pow(2.0, (5 - 2 * p) / 4) * std::pow(p, (1 - 2 * p) / 2);
  return Create(a, b, p, radius, oracle);
}

double SigmSchedule::Alpha(std::int64_t i) const {
  return std::pow((static_cast<double>(i) + p_) / p_, p_ - 1) / a_;
}

double SigmSchedule::Beta(std::int64_t i) const {
  return oracle_.beta + b_ * oracle_.sigma / radius_ *
                            std::pow(static_cast<double>(i) + p_ + 1,
                                     (2 * p_ - 1) / 2);
}

double SigmSchedule::BigB(std::int64_t i) const {
  const double alpha = Alpha(i);
  return a_ * alpha * alpha;
}

double SigmSchedule::BigA(std::int64_t k) const {
  double sum = 0.0;
  for (std::int64_t i = 0; i <= k; ++i) sum += Alpha(i);
  return sum;
}

double SigmSchedule::Eta(std::int64_t i) const {
  return Alpha(i + 1) / BigB(i + 1);
}

void ProjectToBall(double radius, std::span<double> x) {
  const double norm = Norm(x);
  if (norm > radius) {
    const double scale = radius / norm;
    for (double& v : x) v *= scale;
  }
}

absl::StatusOr<SigmResult> SigmRun(const GradientOracle& oracle,
                                   std::size_t dimension,
                                   const SigmSchedule& schedule,
                                   const SigmOptions& options) {
  if (dimension == 0) return absl::InvalidArgumentError("dimension must be positive");
  if (options.iterations < 1) {
    return absl::InvalidArgumentError("SIGM needs at least one iteration");
  }
  if (options.record_trace && options.trace_every < 1) {
    return absl::InvalidArgumentError("trace_every must be >= 1");
  }
  const double radius = schedule.radius();
  const std::size_t p = dimension;

  SigmResult result;
  std::vector<double> x(p, 0.0), y(p), z(p), x_hat(p), w(p), g(p), sum_g(p);
  auto track = [&result](std::span<const double> v) {
    result.max_iterate_norm = std::max(result.max_iterate_norm, Norm(v));
  };

  // x_0 minimises ||x||^2 / 2 over the ball.
  RETURN_IF_ERROR(oracle(x, g));
  double alpha = schedule.Alpha(0);
  double big_a = alpha;
  for (std::size_t j = 0; j < p; ++j) {
    sum_g[j] = alpha * g[j];
    // The linear term's constant <G, x_0> is irrelevant to the argmin.
    y[j] = -alpha * g[j] / schedule.Beta(0);
  }
  ProjectToBall(radius, y);
  track(y);

  auto record = [&](std::int64_t iter, double step) {
    if (!options.record_trace || iter % options.trace_every != 0) return;
    TraceRow row;
    row.iter = iter;
    row.objective_estimate = options.objective
                                 ? options.objective(y)
                                 : std::numeric_limits<double>::quiet_NaN();
    row.step_norm = step;
    result.trace.push_back(row);
  };
  record(0, 0.0);

  std::vector<double> y_prev(p);
  for (std::int64_t k = 0; k < options.iterations; ++k) {
    const double beta_k = schedule.Beta(k);
    for (std::size_t j = 0; j < p; ++j) z[j] = -sum_g[j] / beta_k;
    ProjectToBall(radius, z);

    const double eta = schedule.Eta(k);
    for (std::size_t j = 0; j < p; ++j) x[j] = eta * z[j] + (1 - eta) * y[j];
    // x is a convex combination of ball points but may drift by rounding.
    ProjectToBall(radius, x);

    RETURN_IF_ERROR(oracle(x, g));
    const double alpha_next = schedule.Alpha(k + 1);
    for (std::size_t j = 0; j < p; ++j) {
      x_hat[j] = z[j] - alpha_next * g[j] / beta_k;
    }
    ProjectToBall(radius, x_hat);
    for (std::size_t j = 0; j < p; ++j) {
      w[j] = eta * x_hat[j] + (1 - eta) * y[j];
    }

    big_a += alpha_next;
    const double big_b = schedule.BigB(k + 1);
    const double keep = (big_a - big_b) / big_a;
    const double mix = big_b / big_a;
    y_prev = y;
    for (std::size_t j = 0; j < p; ++j) y[j] = keep * y[j] + mix * w[j];
    ProjectToBall(radius, y);
    kernels::Axpy(alpha_next, g, sum_g);

    track(x);
    track(z);
    track(x_hat);
    track(w);
    track(y);
    double step = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      step += (y[j] - y_prev[j]) * (y[j] - y_prev[j]);
    }
    record(k + 1, std::sqrt(step));
  }
  result.y = std::move(y);
  return result;
}

absl::Status WriteTraceCsv(const std::string& path,
                           std::span<const TraceRow> trace) {
  std::ofstream out(path);
  if (!out) {
    return absl::InternalError(absl::StrFormat("cannot open %s", path));
  }
  out << "iter,objective_estimate,step_norms\n";
  for (const TraceRow& row : trace) {
    out << absl::StrFormat("%d,%.17g,%.17g\n", row.iter,
                           row.objective_estimate, row.step_norm);
  }
  if (!out) return absl::InternalError(absl::StrFormat("write to %s failed", path));
  return absl::OkStatus();
}

}  // namespace ldp::sigm
