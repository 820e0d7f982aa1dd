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


#include "ldp/bernstein_erm/minimize.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "ldp/bernstein_erm/bernstein_model.h"
#include "ldp/bernstein_erm/constraint.h"

namespace ldp::bernstein_erm {
namespace {

BernsteinModel Fit1d(const std::function<double(double)>& f, int k, int h = 1) {
  std::vector<double> values(k + 1);
  for (int v = 0; v <= k; ++v) values[v] = f(static_cast<double>(v) / k);
  return *BernsteinModel::Create({k, h, 1}, values);
}

TEST(ConstraintTest, BallMustStayInCube) {
  EXPECT_FALSE(Constraint::Ball({0.2, 0.5}, 0.3).ok());
  EXPECT_TRUE(Constraint::Ball({0.5, 0.5}, 0.5).ok());
}

TEST(ConstraintTest, ProjectionLandsInside) {
  auto ball = Constraint::Ball({0.5, 0.5}, 0.25);
  std::vector<double> w = {1.0, 1.0};
  ball->Project(w);
  EXPECT_TRUE(ball->Contains(w));
  EXPECT_NEAR(std::hypot(w[0] - 0.5, w[1] - 0.5), 0.25, 1e-12);
  double lo, hi;
  ball->AxisRange(std::vector<double>{0.5, 0.5}, 0, &lo, &hi);
  EXPECT_NEAR(lo, -0.25, 1e-12);
  EXPECT_NEAR(hi, 0.25, 1e-12);
}

TEST(MinimizeModelTest, AffineModelGoesToEndpoint) {
  auto up = Fit1d([](double w) { return 0.2 + 0.5 * w; }, 5);
  auto down = Fit1d([](double w) { return 0.9 - 0.6 * w; }, 5);
  auto cube = *Constraint::UnitCube(1);
  EXPECT_NEAR(MinimizeModel(up, cube).w[0], 0.0, 1e-9);
  EXPECT_NEAR(MinimizeModel(down, cube).w[0], 1.0, 1e-9);
  auto box = *Constraint::Box({0.2}, {0.7});
  EXPECT_NEAR(MinimizeModel(up, box).w[0], 0.2, 1e-9);
}

TEST(MinimizeModelTest, QuadraticFit) {
  auto model = Fit1d([](double w) { return (w - 0.3) * (w - 0.3); }, 16);
  auto cube = *Constraint::UnitCube(1);
  const MinimizeResult r = MinimizeModel(model, cube);
  auto oracle = DenseGridMinimize(
      [&model](std::span<const double> w) { return *model.Evaluate(w); }, cube,
      1e-3);
  EXPECT_NEAR(r.w[0], 0.3, 0.02);
  EXPECT_NEAR(r.w[0], oracle.w[0], 1e-4);
}

TEST(MinimizeModelTest, TwoEqualMinima) {
  auto model = Fit1d(
      [](double w) { return std::pow((w - 0.2) * (w - 0.8), 2) * 10; }, 12, 2);
  auto cube = *Constraint::UnitCube(1);
  const MinimizeResult r = MinimizeModel(model, cube);
  auto oracle = DenseGridMinimize(
      [&model](std::span<const double> w) { return *model.Evaluate(w); }, cube,
      1e-3);
  EXPECT_LE(r.value, oracle.value + 1e-9);
  EXPECT_TRUE(std::fabs(r.w[0] - 0.2) < 0.05 || std::fabs(r.w[0] - 0.8) < 0.05);
}

TEST(MinimizeModelTest, TwoDimensionalAgreesWithDenseGrid) {
  auto op = polyapprox::IteratedBernsteinOperator::Create({8, 2, 2});
  auto values = op->SampleGrid([](std::span<const double> y) {
    return std::pow(y[0] - 0.35, 2) + 0.5 * std::pow(y[1] - 0.6, 2) +
           0.1 * std::sin(5 * y[0] * y[1]);
  });
  auto model = *BernsteinModel::Create({8, 2, 2}, values);
  for (auto constraint :
       {*Constraint::UnitCube(2), *Constraint::Ball({0.5, 0.5}, 0.15)}) {
    const MinimizeResult r = MinimizeModel(model, constraint);
    auto oracle = DenseGridMinimize(
        [&model](std::span<const double> w) { return *model.Evaluate(w); },
        constraint, 1e-3);
    EXPECT_TRUE(constraint.Contains(r.w));
    EXPECT_LE(r.value, oracle.value + 1e-9);
  }
}

TEST(HaltonTest, FirstPoints) {
  auto p0 = HaltonPoint(0, 2);
  auto p1 = HaltonPoint(1, 2);
  EXPECT_DOUBLE_EQ(p0[0], 0.5);
  EXPECT_NEAR(p0[1], 1.0 / 3, 1e-15);
  EXPECT_DOUBLE_EQ(p1[0], 0.25);
  EXPECT_NEAR(p1[1], 2.0 / 3, 1e-15);
}

TEST(GoldenSectionTest, FindsInteriorMinimum) {
  EXPECT_NEAR(GoldenSection([](double x) { return (x - 0.123) * (x - 0.123); },
                            0, 1),
              0.123, 1e-8);
}

}  // namespace
}  // namespace ldp::bernstein_erm
