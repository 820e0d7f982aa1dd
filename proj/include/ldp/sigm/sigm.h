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


// Stochastic intermediate gradient method on a Euclidean ball centred at the
// origin. The prox function is ||x||^2 / 2, so every subproblem is a
// projection of an explicit point onto the ball.

#ifndef LDP_SIGM_SIGM_H_
#define LDP_SIGM_SIGM_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace ldp::sigm {

// (gamma, beta, sigma) inexact stochastic oracle parameters. Any beta > 0 is
// accepted.
struct OracleContract {
  double gamma = 0.0;
  double beta = 1.0;
  double sigma = 0.0;

  absl::Status Validate() const;
};

class SigmSchedule {
 public:
  // alpha_i = (1/a) ((i + p) / p)^(p - 1)
  // beta_i  = beta + (b sigma / R) (i + p + 1)^((2p - 1) / 2)
  // B_i     = a alpha_i^2
  static absl::StatusOr<SigmSchedule> Create(double a, double b,
                                             double p_exponent, double radius,
                                             const OracleContract& oracle);
  // a = 2^((p-1)/2), b = 2^((5-2p)/4) p^((1-2p)/2).
  static absl::StatusOr<SigmSchedule> Balanced(double p_exponent,
                                               double radius,
                                               const OracleContract& oracle);

  double a() const { return a_; }
  double b() const { return b_; }
  double p_exponent() const { return p_; }
  double radius() const { return radius_; }
  const OracleContract& oracle() const { return oracle_; }

  double Alpha(std::int64_t i) const;
  double Beta(std::int64_t i) const;
  double BigB(std::int64_t i) const;
  // sum_{i=0..k} alpha_i, by direct summation.
  double BigA(std::int64_t k) const;
  double Eta(std::int64_t i) const;

 private:
  SigmSchedule(double a, double b, double p, double radius,
               OracleContract oracle)
      : a_(a), b_(b), p_(p), radius_(radius), oracle_(oracle) {}

  double a_;
  double b_;
  double p_;
  double radius_;
  OracleContract oracle_;
};

// Writes a stochastic gradient at x into g (same dimension).
using GradientOracle =
    std::function<absl::Status(std::span<const double> x, std::span<double> g)>;

struct TraceRow {
  std::int64_t iter = 0;
  double objective_estimate = 0.0;
  double step_norm = 0.0;
};

struct SigmOptions {
  std::int64_t iterations = 1;
  // When set, trace rows are kept every `trace_every` iterations and carry
  // objective(y_k); otherwise the objective column is NaN.
  bool record_trace = false;
  std::int64_t trace_every = 1;
  std::function<double(std::span<const double>)> objective;
};

struct SigmResult {
  std::vector<double> y;
  // Largest norm over all x, y, z, x_hat and w iterates.
  double max_iterate_norm = 0.0;
  std::vector<TraceRow> trace;
};

// Projects onto {||x|| <= radius} in place.
void ProjectToBall(double radius, std::span<double> x);

// Runs `options.iterations` steps from x_0 = 0 and returns y_T. The ball
// radius is schedule.radius(), which must lie in (0, 1].
absl::StatusOr<SigmResult> SigmRun(const GradientOracle& oracle,
                                   std::size_t dimension,
                                   const SigmSchedule& schedule,
                                   const SigmOptions& options);

// Header `iter,objective_estimate,step_norms`.
absl::Status WriteTraceCsv(const std::string& path,
                           std::span<const TraceRow> trace);

}  // namespace ldp::sigm

#endif  // LDP_SIGM_SIGM_H_
