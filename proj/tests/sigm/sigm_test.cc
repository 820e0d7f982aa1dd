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
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "ldp/primitives/rng.h"
#include "testing/stats.h"

namespace ldp::sigm {
namespace {

constexpr double kTarget[2] = {0.5, 0.0};

double HalfSquareGap(std::span<const double> w) {
  return 0.5 * (std::pow(w[0] - kTarget[0], 2) + std::pow(w[1] - kTarget[1], 2));
}

GradientOracle ExactOracle() {
  return [](std::span<const double> x, std::span<double> g) {
    g[0] = x[0] - kTarget[0];
    g[1] = x[1] - kTarget[1];
    return absl::OkStatus();
  };
}

// Gradient plus isotropic Gaussian noise with E||noise||^2 = sigma^2.
GradientOracle NoisyOracle(double sigma, std::uint64_t seed) {
  auto engine = std::make_shared<std::mt19937_64>(seed);
  return [engine, sigma](std::span<const double> x, std::span<double> g) {
    std::normal_distribution<double> normal(0.0, sigma / std::sqrt(2.0));
    g[0] = x[0] - kTarget[0] + normal(*engine);
    g[1] = x[1] - kTarget[1] + normal(*engine);
    return absl::OkStatus();
  };
}

TEST(SigmScheduleTest, UnitExponentIsConstant) {
  auto s = SigmSchedule::Create(1, 0, 1, 1, OracleContract{});
  ASSERT_TRUE(s.ok());
  EXPECT_DOUBLE_EQ(s->Alpha(3), 1.0);
  EXPECT_DOUBLE_EQ(s->BigA(3), 4.0);
  EXPECT_DOUBLE_EQ(s->Eta(3), 1.0);
  EXPECT_DOUBLE_EQ(s->BigB(7), 1.0);
}

TEST(SigmScheduleTest, BalancedConstants) {
  auto s1 = SigmSchedule::Balanced(1, 1, OracleContract{});
  EXPECT_DOUBLE_EQ(s1->a(), 1.0);
  EXPECT_NEAR(s1->b(), std::pow(2.0, 0.75), 1e-15);
  auto s2 = SigmSchedule::Balanced(2, 1, OracleContract{});
  EXPECT_NEAR(s2->a(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s2->b(), std::pow(2.0, 0.25) / std::pow(2.0, 1.5), 1e-15);
}

TEST(SigmScheduleTest, ClosedFormsForQuadraticExponent) {
  const double a = 1.7;
  OracleContract oracle{.gamma = 0, .beta = 2.0, .sigma = 0.3};
  auto s = SigmSchedule::Create(a, 0.4, 2, 0.8, oracle);
  ASSERT_TRUE(s.ok());
  double running = 0;
  for (std::int64_t i = 0; i <= 10000; ++i) {
    const double alpha = (i + 2) / (2 * a);
    running += s->Alpha(i);
    ASSERT_NEAR(s->Alpha(i), alpha, 1e-10 * alpha);
    ASSERT_NEAR(s->BigB(i), (i + 2.0) * (i + 2.0) / (4 * a), 1e-10 * (i + 2) * (i + 2));
    ASSERT_NEAR(s->Eta(i), 2.0 / (i + 3), 1e-10);
    ASSERT_NEAR(s->Beta(i), 2.0 + 0.4 * 0.3 / 0.8 * std::pow(i + 3.0, 1.5),
                1e-10 * std::pow(i + 3.0, 1.5));
    const double closed = (i + 1.0) * (i + 4.0) / (4 * a);
    ASSERT_NEAR(running, closed, 1e-10 * closed);
    ASSERT_LE(s->BigB(i), closed * (1 + 1e-12));
  }
  EXPECT_NEAR(s->BigA(10000), 10001.0 * 10004.0 / (4 * a), 1e-6);
}

TEST(SigmScheduleTest, RejectsBadParameters) {
  EXPECT_FALSE(SigmSchedule::Create(0.5, 0, 1, 1, {}).ok());
  EXPECT_FALSE(SigmSchedule::Create(1, 0, 1, 1.5, {}).ok());
  EXPECT_FALSE(SigmSchedule::Create(1, 0, 0.5, 1, {}).ok());
  EXPECT_FALSE(SigmSchedule::Create(1, 0, 1, 1, {.beta = 0}).ok());
  EXPECT_FALSE(SigmSchedule::Create(1, 0, 1, 1, {.gamma = -1}).ok());
  // Small but positive beta is accepted.
  EXPECT_TRUE(SigmSchedule::Create(1, 0, 1, 1, {.beta = 1e-6}).ok());
}

TEST(SigmRunTest, ExactOracleConverges) {
  auto s = SigmSchedule::Create(1, 0, 1, 1, {.beta = 2.0});
  SigmOptions options;
  options.iterations = 500;
  options.record_trace = true;
  options.objective = HalfSquareGap;
  auto r = SigmRun(ExactOracle(), 2, *s, options);
  ASSERT_TRUE(r.ok());
  EXPECT_LE(HalfSquareGap(r->y), 1e-3);
  EXPECT_LE(r->max_iterate_norm, 1.0 + 1e-12);
  ASSERT_EQ(r->trace.size(), 501u);
  double best = r->trace[0].objective_estimate;
  for (const TraceRow& row : r->trace) {
    const double next = std::min(best, row.objective_estimate);
    EXPECT_LE(next, best);
    best = next;
  }
  EXPECT_LT(r->trace.back().objective_estimate, r->trace[0].objective_estimate);
}

TEST(SigmRunTest, OptimumOutsideBallLandsOnBoundary) {
  auto s = SigmSchedule::Create(1, 0, 1, 0.3, {.beta = 1.0});
  auto r = SigmRun(ExactOracle(), 2, *s, {.iterations = 2000});
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(r->y[0], 0.3, 2e-3);
  EXPECT_NEAR(r->y[1], 0.0, 1e-6);
  EXPECT_LE(r->max_iterate_norm, 0.3 + 1e-12);
}

TEST(SigmRunTest, NoisyIteratesStayFeasible) {
  auto s = SigmSchedule::Balanced(2, 0.6, {.beta = 1.0, .sigma = 5.0});
  auto r = SigmRun(NoisyOracle(5.0, 3), 2, *s, {.iterations = 3000});
  ASSERT_TRUE(r.ok());
  EXPECT_LE(r->max_iterate_norm, 0.6 + 1e-12);
}

// Mean optimality gap over seeds with the quadratic-exponent schedule.
double MeanGap(std::int64_t iterations, int seeds) {
  const double sigma = 1.0;
  auto s = SigmSchedule::Balanced(2, 1, {.beta = 1.0, .sigma = sigma});
  std::vector<double> gaps;
  for (int seed = 0; seed < seeds; ++seed) {
    auto r = SigmRun(NoisyOracle(sigma, 1000 + seed), 2, *s,
                     {.iterations = iterations});
    gaps.push_back(HalfSquareGap(r->y));
  }
  return testing::Mean(gaps);
}

TEST(SigmRunTest, NoiseLimitedRateIsSquareRoot) {
  const double ratio = MeanGap(10000, 100) / MeanGap(40000, 100);
  EXPECT_GE(ratio, 1.6);
  EXPECT_LE(ratio, 2.6);
}

TEST(SigmRunTest, BiasedOracleHasAFloor) {
  const double gamma = 0.05;
  const double bias = std::sqrt(1.5 * gamma);
  auto s = SigmSchedule::Create(1, 0, 1, 1, {.gamma = gamma, .beta = 4.0});
  GradientOracle biased = [bias](std::span<const double> x, std::span<double> g) {
    g[0] = x[0] - kTarget[0];
    g[1] = x[1] - kTarget[1] + bias;
    return absl::OkStatus();
  };
  auto r = SigmRun(biased, 2, *s, {.iterations = 100000});
  ASSERT_TRUE(r.ok());
  const double gap = HalfSquareGap(r->y);
  EXPECT_LE(gap, gamma + 1e-3);
  EXPECT_GE(gap, gamma / 2);
}

TEST(SigmRunTest, DeterministicGivenOracleSeed) {
  auto s = SigmSchedule::Balanced(1, 1, {.beta = 1.0, .sigma = 1.0});
  SigmOptions options{.iterations = 300, .record_trace = true};
  auto a = SigmRun(NoisyOracle(1.0, 9), 2, *s, options);
  auto b = SigmRun(NoisyOracle(1.0, 9), 2, *s, options);
  EXPECT_EQ(a->y, b->y);
  ASSERT_EQ(a->trace.size(), b->trace.size());
  for (std::size_t i = 0; i < a->trace.size(); ++i) {
    EXPECT_EQ(a->trace[i].step_norm, b->trace[i].step_norm);
  }
}

TEST(SigmRunTest, SingleStepIsFeasible) {
  auto s = SigmSchedule::Create(1, 0, 1, 1, {.beta = 0.01});
  auto r = SigmRun(ExactOracle(), 2, *s, {.iterations = 1});
  ASSERT_TRUE(r.ok());
  EXPECT_LE(std::hypot(r->y[0], r->y[1]), 1.0 + 1e-12);
}

TEST(SigmRunTest, OracleErrorsPropagate) {
  auto s = SigmSchedule::Create(1, 0, 1, 1, {});
  GradientOracle failing = [](auto, auto) {
    return absl::FailedPreconditionError("no players");
  };
  EXPECT_EQ(SigmRun(failing, 2, *s, {.iterations = 5}).status().code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_FALSE(SigmRun(ExactOracle(), 2, *s, {.iterations = 0}).ok());
}

TEST(SigmTraceTest, CsvRoundTrip) {
  const std::string path = ::testing::TempDir() + "/sigm_trace.csv";
  std::vector<TraceRow> rows = {{0, 1.5, 0.0}, {1, 0.25, 0.125}};
  ASSERT_TRUE(WriteTraceCsv(path, rows).ok());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "iter,objective_estimate,step_norms");
  std::getline(in, line);
  EXPECT_EQ(line, "0,1.5,0");
  std::getline(in, line);
  EXPECT_EQ(line, "1,0.25,0.125");
}

}  // namespace
}  // namespace ldp::sigm
