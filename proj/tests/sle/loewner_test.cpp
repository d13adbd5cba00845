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

#include "isingff/sle/loewner.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace isingff;
using Complex = std::complex<double>;

namespace {

sle::LoewnerConfig deterministic(double dt) {
  sle::LoewnerConfig cfg;
  cfg.dt = dt;
  cfg.noise = false;
  cfg.partition_drift = false;
  cfg.interaction_drift = false;
  cfg.swallow_eps = 0.0;
  return cfg;
}

}  // namespace

TEST(Loewner, ZeroDrivingClosedForm) {
  const Complex pts[1] = {Complex(0.0, 1.0)};
  auto ens = sle::LoewnerEnsemble::make({0.0}, pts, deterministic(1e-4), RngStream(1, 0));
  sle::evolve(ens, 1000);
  EXPECT_NEAR(ens.t, 0.1, 1e-12);
  EXPECT_NEAR(std::abs(ens.tracked[0].g - Complex(0.0, std::sqrt(0.6))), 0.0, 1e-10);
  // g'(z) = z / sqrt(z^2 + 4t).
  const Complex expected_prime = Complex(0.0, 1.0) / std::sqrt(Complex(-1.0 + 0.4, 0.0));
  EXPECT_NEAR(std::abs(ens.tracked[0].g_prime - expected_prime), 0.0, 1e-10);
}

TEST(Loewner, HydrodynamicNormalization) {
  const Complex pts[1] = {std::polar(1e3, 1.0)};
  auto ens = sle::LoewnerEnsemble::make({0.0}, pts, deterministic(1e-3), RngStream(1, 0));
  sle::evolve(ens, 200);
  EXPECT_LT(std::abs(ens.tracked[0].g - pts[0]), 1e-2 * ens.t);
}

TEST(Loewner, FarPartnerDriftIsSmall) {
  const double X[2] = {0.0, 1e3};
  const auto b = sle::driving_drift(X, sle::LoewnerConfig{});
  EXPECT_NEAR(b[0], -1.0 / (0.0 - 1e3), 1e-15);
  EXPECT_LT(std::abs(b[0]), 2e-3);
}

TEST(Loewner, ReproducibleAndOrdered) {
  sle::LoewnerConfig cfg;
  cfg.dt = 1e-3;
  const Complex pts[2] = {{-1.0, 2.0}, {2.0, 2.0}};
  auto a = sle::LoewnerEnsemble::make({0.0, 10.0}, pts, cfg, RngStream(7, 3));
  auto b = sle::LoewnerEnsemble::make({0.0, 10.0}, pts, cfg, RngStream(7, 3));
  sle::evolve(a, 300);
  sle::evolve(b, 300);
  EXPECT_EQ(a.X, b.X);
  EXPECT_EQ(a.tracked[1].g, b.tracked[1].g);
  EXPECT_LT(a.X[0], a.X[1]);
  for (const auto& p : a.tracked) EXPECT_GT(p.g.imag(), 0.0);
}

TEST(Loewner, StrongConvergenceInDt) {
  // Same Brownian path at dt and dt/2: sum pairs of fine increments. The driving
  // point gets Euler-Maruyama; the path-wise gap shrinks as dt does.
  auto gap = [](double dt) {
    sle::LoewnerConfig coarse;
    coarse.dt = dt;
    coarse.noise = false;
    auto fine = coarse;
    fine.dt = dt / 2;
    const Complex pts[1] = {{0.5, 1.0}};
    auto c = sle::LoewnerEnsemble::make({0.0, 10.0}, pts, coarse, RngStream(1, 0));
    auto f = sle::LoewnerEnsemble::make({0.0, 10.0}, pts, fine, RngStream(1, 0));
    RngStream noise(11, 0);
    const int steps = static_cast<int>(std::lround(0.2 / dt));
    for (int s = 0; s < steps; ++s) {
      const double a0 = std::sqrt(3.0 * dt / 2) * noise.normal(), a1 = std::sqrt(3.0 * dt / 2) * noise.normal();
      const double b0 = std::sqrt(3.0 * dt / 2) * noise.normal(), b1 = std::sqrt(3.0 * dt / 2) * noise.normal();
      sle::evolve(f, 1);
      f.X[0] += a0;
      f.X[1] += b0;
      sle::evolve(f, 1);
      f.X[0] += a1;
      f.X[1] += b1;
      sle::evolve(c, 1);
      c.X[0] += a0 + a1;
      c.X[1] += b0 + b1;
    }
    return std::abs(c.tracked[0].g - f.tracked[0].g);
  };
  const double g1 = gap(4e-3), g2 = gap(1e-3);
  EXPECT_LT(g2, g1);
}

TEST(Loewner, SwallowingStopsThePath) {
  auto cfg = deterministic(1e-3);
  cfg.swallow_eps = 0.1;
  const Complex pts[1] = {{0.0, 1.0}};
  auto ens = sle::LoewnerEnsemble::make({0.0}, pts, cfg, RngStream(1, 0));
  sle::evolve(ens, 400);
  EXPECT_EQ(ens.status, sle::PathStatus::swallowed);
  EXPECT_LT(ens.t, 0.25);
}

TEST(Loewner, Guards) {
  const Complex below[1] = {{0.0, -1.0}};
  EXPECT_THROW(sle::LoewnerEnsemble::make({0.0}, below, {}, RngStream(1, 0)), std::invalid_argument);
  EXPECT_THROW(sle::LoewnerEnsemble::make({1.0, 0.0}, {}, {}, RngStream(1, 0)), std::invalid_argument);
  EXPECT_THROW(sle::LoewnerEnsemble::make({0.0, 1.0, 2.0}, {}, {}, RngStream(1, 0)), std::invalid_argument);
}
