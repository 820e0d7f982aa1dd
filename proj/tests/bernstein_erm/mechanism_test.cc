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


#include "ldp/bernstein_erm/mechanism.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "ldp/bernstein_erm/bernstein_model.h"
#include "ldp/bernstein_erm/constraint.h"
#include "ldp/bernstein_erm/cube_dataset.h"
#include "ldp/primitives/rng.h"
#include "testing/stats.h"

namespace ldp::bernstein_erm {
namespace {

double SquareLoss(std::span<const double> w, std::span<const double> x) {
  return (w[0] - x[0]) * (w[0] - x[0]);
}

double QuarticLoss(std::span<const double> w, std::span<const double> x) {
  const double d = w[0] - x[0];
  return d * d * d * d;
}

CubeDataset UniformData(std::size_t n, std::uint64_t seed, CubeLoss loss) {
  Rng rng(seed);
  std::vector<double> xs(n);
  for (double& x : xs) x = rng.Uniform();
  return *CubeDataset::Create(1, 1, std::move(xs), std::move(loss));
}

Constraint Cube1() { return *Constraint::UnitCube(1); }

TEST(GridPointsTest, Enumeration) {
  auto g = GridPoints(1, 2);
  ASSERT_TRUE(g.ok());
  const std::vector<std::vector<double>> expected = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(*g, expected);
  auto g1 = GridPoints(2, 1);
  EXPECT_EQ(*g1, (std::vector<std::vector<double>>{{0}, {0.5}, {1}}));
  EXPECT_EQ(GridPoints(3, 3)->size(), 64u);
}

TEST(GridPointsTest, CapIsAConfigurationError) {
  auto g = GridPoints(9, 4, 1000);
  EXPECT_EQ(g.status().code(), absl::StatusCode::kResourceExhausted);
  EXPECT_NE(g.status().message().find("lower k"), std::string::npos);
}

TEST(LaplaceMechanismTest, VanishingNoiseFindsSampleMean) {
  auto data = UniformData(2000, 1, SquareLoss);
  double mean = 0;
  for (std::size_t i = 0; i < data.n(); ++i) mean += data.record(i)[0] / data.n();
  GridProtocolConfig config;
  config.k = 16;
  config.epsilon = 1e9;
  auto result = RunGridMechanism(data, config, Cube1(), Rng(3));
  ASSERT_TRUE(result.ok()) << result.status();
  EXPECT_NEAR(result->minimum.w[0], mean, 0.05);
}

TEST(LaplaceMechanismTest, FlatLossGivesFlatModel) {
  auto data = UniformData(5000, 2, [](auto, auto) { return 0.5; });
  GridProtocolConfig config;
  config.k = 4;
  config.epsilon = 1.0;
  auto result = RunGridMechanism(data, config, Cube1(), Rng(4));
  ASSERT_TRUE(result.ok());
  for (double v : result->grid_values) EXPECT_NEAR(v, 0.5, 0.4);
  // Any point is optimal for the flat empirical risk.
  EXPECT_NEAR(data.EmpiricalRisk(result->minimum.w), 0.5, 1e-12);
}

TEST(LaplaceMechanismTest, BudgetAccountingSumsToTotal) {
  auto data = UniformData(300, 3, SquareLoss);
  GridProtocolConfig config;
  config.k = 6;
  config.epsilon = 0.7;
  BudgetLedger ledger(data.n());
  ASSERT_TRUE(LaplaceGridValues(data, config, Rng(5), &ledger, nullptr).ok());
  EXPECT_NEAR(ledger.MaxSpent(), 0.7, 1e-12);
  EXPECT_NEAR(ledger.MinSpent(), 0.7, 1e-12);
}

TEST(LaplaceMechanismTest, TranscriptCountsOneRealPerGridPoint) {
  auto data = UniformData(100, 3, SquareLoss);
  GridProtocolConfig config;
  config.k = 4;
  Transcript t;
  auto result = RunGridMechanism(data, config, Cube1(), Rng(6), &t);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(t.num_messages(), 500u);
  EXPECT_DOUBLE_EQ(t.RealsPerPlayer(), 5.0);
  EXPECT_DOUBLE_EQ(result->bits_per_player, 5.0 * 64);
}

// Oracle: the empirical quartic risk is a polynomial in w whose
// coefficients are the first four sample moments; scan it on a 1e-4 grid.
double QuarticRiskMinimum(const CubeDataset& data) {
  double m[5] = {1, 0, 0, 0, 0};
  for (std::size_t i = 0; i < data.n(); ++i) {
    const double x = data.record(i)[0];
    m[1] += x;
    m[2] += x * x;
    m[3] += x * x * x;
    m[4] += x * x * x * x;
  }
  for (int j = 1; j <= 4; ++j) m[j] /= data.n();
  double best = 1e300;
  for (int g = 0; g <= 10000; ++g) {
    const double w = g * 1e-4;
    const double r = std::pow(w, 4) - 4 * std::pow(w, 3) * m[1] +
                     6 * w * w * m[2] - 4 * w * m[3] + m[4];
    best = std::min(best, r);
  }
  return best;
}

TEST(LaplaceMechanismTest, QuarticLossMillionPlayers) {
  auto data = UniformData(1000000, 7, QuarticLoss);
  const double oracle = QuarticRiskMinimum(data);
  GridProtocolConfig config;
  config.k = 8;
  config.epsilon = 2.0;
  int hits = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto result = RunGridMechanism(data, config, Cube1(), Rng(100 + trial));
    ASSERT_TRUE(result.ok());
    const double err = data.EmpiricalRisk(result->minimum.w) - oracle;
    EXPECT_GE(err, -1e-9);
    if (err <= 0.1) ++hits;
  }
  EXPECT_GE(hits, 18);
}

TEST(SurrogateTest, NoiselessFitInterpolatesGridAndTracksRisk) {
  auto data = UniformData(3000, 8, SquareLoss);
  GridProtocolConfig config;
  config.k = 10;
  config.h = 2;
  config.epsilon = 1e12;
  auto values = LaplaceGridValues(data, config, Rng(9), nullptr, nullptr);
  ASSERT_TRUE(values.ok());
  auto points = GridPoints(10, 1);
  for (std::size_t g = 0; g < points->size(); ++g) {
    EXPECT_NEAR((*values)[g], data.EmpiricalRisk((*points)[g]), 1e-9);
  }
  auto model = BernsteinModel::Create({10, 2, 1}, *values);
  // Same operator on the exact risk: the noiseless approximation error.
  std::vector<double> exact;
  for (const auto& pt : *points) exact.push_back(data.EmpiricalRisk(pt));
  auto exact_model = BernsteinModel::Create({10, 2, 1}, exact);
  Rng rng(10);
  double approx_err = 0, fit_err = 0;
  for (int t = 0; t < 200; ++t) {
    const std::vector<double> y = {rng.Uniform()};
    const double risk = data.EmpiricalRisk(y);
    approx_err = std::max(approx_err, std::fabs(*exact_model->Evaluate(y) - risk));
    fit_err = std::max(fit_err, std::fabs(*model->Evaluate(y) - risk));
  }
  EXPECT_LE(fit_err, approx_err + 1e-8);
}

TEST(RandomPartitionTest, CoversAllPlayersInNearEqualCells) {
  auto cells = RandomPartition(103, 9, Rng(11));
  ASSERT_TRUE(cells.ok());
  std::set<std::size_t> seen;
  for (const auto& cell : *cells) {
    EXPECT_GE(cell.size(), 11u);
    EXPECT_LE(cell.size(), 12u);
    seen.insert(cell.begin(), cell.end());
  }
  EXPECT_EQ(seen.size(), 103u);
  auto again = RandomPartition(103, 9, Rng(11));
  EXPECT_EQ(*cells, *again);
}

TEST(RandomPartitionTest, TooFewPlayersFails) {
  auto cells = RandomPartition(5, 9, Rng(12));
  EXPECT_EQ(cells.status().code(), absl::StatusCode::kFailedPrecondition);
}

TEST(OneBitMechanismTest, RejectsLargeEpsilon) {
  auto data = UniformData(1000, 13, SquareLoss);
  GridProtocolConfig config;
  config.mode = GridMode::kOneBit;
  config.epsilon = 1.0;
  EXPECT_EQ(RunGridMechanism(data, config, Cube1(), Rng(1)).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(OneBitMechanismTest, OneBitPerPlayerAndConstantSignal) {
  const double c = 0.4;
  auto data = UniformData(200000, 14, [c](auto, auto) { return c; });
  GridProtocolConfig config;
  config.mode = GridMode::kOneBit;
  config.k = 3;
  config.epsilon = 0.5;
  Transcript t(/*keep_entries=*/false);
  auto result = RunGridMechanism(data, config, Cube1(), Rng(15), &t);
  ASSERT_TRUE(result.ok()) << result.status();
  EXPECT_EQ(t.total_bits(), 200000u);
  EXPECT_EQ(t.num_messages(), 200000u);
  EXPECT_DOUBLE_EQ(result->bits_per_player, 1.0);
  EXPECT_NEAR(result->max_epsilon_per_player, 0.5, 1e-12);
  // Cell of 50000: sd of 2 y b is about sqrt(4 * 8 * 0.5) / sqrt(50000).
  for (double v : result->grid_values) EXPECT_NEAR(v, c, 4 * 0.018);
}

TEST(OneBitMechanismTest, CellEstimatesAreUnbiased) {
  // Loss at grid point g is g/k, so each cell estimates a known value.
  auto data = UniformData(4000, 16, [](std::span<const double> w, auto) {
    return w[0];
  });
  GridProtocolConfig config;
  config.mode = GridMode::kOneBit;
  config.k = 3;
  config.epsilon = 0.5;
  std::vector<std::vector<double>> per_cell(4);
  for (int r = 0; r < 300; ++r) {
    auto values = OneBitGridValues(data, config, Rng(1000 + r), nullptr,
                                   nullptr, nullptr);
    ASSERT_TRUE(values.ok());
    for (int g = 0; g < 4; ++g) per_cell[g].push_back((*values)[g]);
  }
  for (int g = 0; g < 4; ++g) {
    const double se = std::sqrt(testing::Variance(per_cell[g]) / 300);
    EXPECT_NEAR(testing::Mean(per_cell[g]), g / 3.0, 3.5 * se) << g;
  }
}

TEST(OneBitMechanismTest, WarnsWhenPlayersAreScarce) {
  auto data = UniformData(15, 17, SquareLoss);
  GridProtocolConfig config;
  config.mode = GridMode::kOneBit;
  config.k = 8;
  config.epsilon = 0.5;
  auto result = RunGridMechanism(data, config, Cube1(), Rng(18));
  ASSERT_TRUE(result.ok());
  EXPECT_FALSE(result->notes.empty());
}

TEST(MechanismTest, ClippedLossesAreCounted) {
  auto data = UniformData(50, 19, [](auto, auto) { return 1.5; });
  GridProtocolConfig config;
  config.k = 2;
  auto result = RunGridMechanism(data, config, Cube1(), Rng(20));
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result->clipped_losses, 150u);
  EXPECT_FALSE(result->notes.empty());
}

TEST(MechanismTest, ModeNamesRoundTrip) {
  EXPECT_EQ(*ParseGridMode(GridModeName(GridMode::kOneBit)), GridMode::kOneBit);
  EXPECT_EQ(*ParseGridMode("laplace"), GridMode::kLaplacePerPoint);
  EXPECT_FALSE(ParseGridMode("bogus").ok());
}

TEST(MechanismTest, RecommendedKGrowsWithN) {
  const int small = RecommendedK(10000, 1, 1, 1.0, 0.05);
  const int large = RecommendedK(100000000, 1, 1, 1.0, 0.05);
  EXPECT_GE(small, 1);
  EXPECT_GT(large, small);
}

}  // namespace
}  // namespace ldp::bernstein_erm
