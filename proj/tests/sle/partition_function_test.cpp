/*
 * Copyright 2026 The isingff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "isingff/sle/partition_function.hpp"

#include "isingff/cft/chart.hpp"
#include "isingff/cft/correlators.hpp"
#include "isingff/numerics/finite_difference.hpp"

#include <gtest/gtest.h>

using namespace isingff;

TEST(Kappa, CentralChargeAndWeight) {
  EXPECT_DOUBLE_EQ(sle::central_charge(sle::kKappa), 0.5);
  EXPECT_DOUBLE_EQ(sle::boundary_weight(sle::kKappa), 0.5);
}

TEST(PartitionFunction, TwoPoints) {
  const double xs[2] = {0.0, 1.0};
  EXPECT_DOUBLE_EQ(sle::partition_function(xs), -1.0);
}

TEST(PartitionFunction, FourPointsMatchPairingSum) {
  const double xs[4] = {-1.3, 0.2, 0.9, 2.5};
  const std::complex<double> cs[4] = {-1.3, 0.2, 0.9, 2.5};
  const auto oracle = cft::wick_pairing_oracle(cft::ConformalChart::identity(), cs);
  EXPECT_NEAR(sle::partition_function(xs), oracle.real(), 1e-12);
}

TEST(PartitionFunction, Guards) {
  const double unordered[2] = {1.0, 0.0};
  const double odd[3] = {0.0, 1.0, 2.0};
  EXPECT_THROW(sle::partition_function(unordered), std::invalid_argument);
  EXPECT_THROW(sle::partition_function(odd), std::invalid_argument);
}

TEST(PartitionFunction, ScalingDegree) {
  const double xs[4] = {0.0, 1.0, 2.0, 4.0};
  const double ys[4] = {0.0, 2.0, 4.0, 8.0};
  EXPECT_NEAR(sle::partition_function(ys), sle::partition_function(xs) / 4.0, 1e-14);
}

TEST(LogGradient, MatchesFiniteDifferences) {
  for (const auto& xs : std::vector<std::vector<double>>{{0.0, 1.0}, {0.0, 1.0, 2.0, 4.0}, {-3.0, -0.5, 0.7, 1.1, 2.0, 5.0}}) {
    const auto grad = sle::log_gradient(xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto fd = central_diff(
          [&](std::complex<double> x) {
            std::vector<std::complex<double>> p(xs.begin(), xs.end());
            p[i] = x;
            return std::log(sle::partition_function(std::span<const std::complex<double>>(p)));
          },
          xs[i], 1);
      EXPECT_NEAR(grad[i], fd.real(), 1e-8) << xs.size() << " " << i;
    }
  }
}

TEST(PdeResiduals, TwoAndFourPoints) {
  for (const auto& xs : std::vector<std::vector<double>>{{0.0, 1.0}, {0.0, 1.0, 2.0, 4.0}, {-2.0, -0.3, 1.5, 2.2}}) {
    const auto report = sle::pde_residuals(xs);
    EXPECT_EQ(report.size(), 3 + xs.size());
    for (const auto& r : report) EXPECT_LT(r.relative(), 1e-5) << r.name << " " << xs.size();
  }
}

TEST(PdeResiduals, NullFieldTermsForOnePair) {
  // Z = 1/d: (3/4) 2/d^3 - 1/d^3 - (1/2)/d^3 = 0 term by term.
  const double xs[2] = {0.0, 2.0};
  const auto report = sle::pde_residuals(xs);
  const double d = -2.0;
  EXPECT_NEAR(report[3].scale, (1.5 + 1.0 + 0.5) / std::abs(d * d * d), 1e-6);
  EXPECT_LT(report[3].residual, 1e-7);
}
