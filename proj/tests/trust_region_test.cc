// Copyright 2026 The AroQdr Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aroqdr/trust_region.h"

#include <random>

#include "aroqdr/verify.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace aroqdr {
namespace {

double Quadratic(const Eigen::MatrixXd& Q, const Eigen::VectorXd& g, double c0,
                 const Eigen::VectorXd& z) {
  return z.dot(Q * z) + g.dot(z) + c0;
}

TEST(WorstCaseQuadraticTest, IdentityOnTheBoundary) {
  const TrustRegionResult r = WorstCaseQuadratic(
      Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero(), 0.0, 2.0);
  EXPECT_NEAR(r.value, 4.0, 1e-12);
  EXPECT_NEAR(r.argmax.norm(), 2.0, 1e-12);
}

TEST(WorstCaseQuadraticTest, LinearObjective) {
  const TrustRegionResult r = WorstCaseQuadratic(
      Eigen::Matrix2d::Zero(), Eigen::Vector2d(3, 4), 1.0, 1.0);
  EXPECT_NEAR(r.value, 6.0, 1e-12);
  EXPECT_NEAR(r.argmax(0), 0.6, 1e-12);
  EXPECT_NEAR(r.argmax(1), 0.8, 1e-12);
}

TEST(WorstCaseQuadraticTest, IndefiniteMatchesGrid) {
  const Eigen::Matrix2d Q{{1, 0}, {0, -1}};
  const Eigen::Vector2d g(0, 1);
  const TrustRegionResult r = WorstCaseQuadratic(Q, g, 0.0, 1.0);
  // z = (cos t, sin t) gives 1 - 2 sin^2 t + sin t, maximal at sin t = 1/4.
  EXPECT_NEAR(r.value, 1.125, 1e-12);
  EXPECT_NEAR(r.value, testing::GridMaxQuadratic(Q, g, 0.0, 1.0, 200), 1e-6);
  EXPECT_NEAR(Quadratic(Q, g, 0.0, r.argmax), r.value, 1e-9);
}

TEST(WorstCaseQuadraticTest, HardCaseNeedsEigenvectorComponent) {
  // g is orthogonal to the top eigenvector e_1, and the interior solution of
  // (mu I - Q) z = g / 2 at mu = 2 is too short to reach the boundary.
  const Eigen::Matrix2d Q{{2, 0}, {0, 1}};
  const Eigen::Vector2d g(0, 0.5);
  const TrustRegionResult r = WorstCaseQuadratic(Q, g, 0.0, 1.0);
  EXPECT_TRUE(r.hard_case);
  // z = (sqrt(1 - 1/16), 1/4): 2 * 15/16 + 1/16 + 1/8.
  EXPECT_NEAR(r.value, 2.0625, 1e-10);
  EXPECT_NEAR(r.argmax.norm(), 1.0, 1e-10);
  EXPECT_NEAR(Quadratic(Q, g, 0.0, r.argmax), r.value, 1e-9);
}

TEST(WorstCaseQuadraticTest, ConcaveInteriorMaximum) {
  // -|z|^2 + z_1 peaks at z = (1/2, 0) with value 1/4.
  const TrustRegionResult r = WorstCaseQuadratic(
      -Eigen::Matrix2d::Identity(), Eigen::Vector2d(1, 0), 0.0, 3.0);
  EXPECT_NEAR(r.value, 0.25, 1e-12);
  EXPECT_NEAR(r.multiplier, 0.0, 1e-12);
  EXPECT_NEAR(r.argmax(0), 0.5, 1e-12);
}

TEST(WorstCaseQuadraticTest, RandomQuadraticsAgainstGridAndSamples) {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int l = 1 + trial % 3;
    const Eigen::MatrixXd Q = testing::RandomSymmetric(l, 1.0, rng);
    Eigen::VectorXd g(l);
    for (int i = 0; i < l; ++i) g(i) = unif(rng);
    const double radius = 0.5 + std::abs(unif(rng));
    const TrustRegionResult r = WorstCaseQuadratic(Q, g, 0.1, radius);
    EXPECT_LE(r.argmax.norm(), radius + 1e-9);
    EXPECT_NEAR(Quadratic(Q, g, 0.1, r.argmax), r.value, 1e-9);
    EXPECT_NEAR(r.value, testing::GridMaxQuadratic(Q, g, 0.1, radius, 40),
                1e-4);
    for (int s = 0; s < 200; ++s) {
      const Eigen::VectorXd z = SampleBall(l, radius, rng);
      EXPECT_LE(Quadratic(Q, g, 0.1, z), r.value + 1e-9);
    }
  }
}

}  // namespace
}  // namespace aroqdr
