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

#include "isingff/numerics/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace isingff {
namespace {

TEST(Philox, KnownAnswers) {
  // Random123 known-answer vectors for philox4x32-10.
  EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}),
            (std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                       {0xffffffffu, 0xffffffffu}),
            (std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
  EXPECT_EQ(philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                       {0xa4093822u, 0x299f31d0u}),
            (std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(RngStream, Reproducible) {
  RngStream a(42, 7), b(42, 7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.normal(), b.normal());
  RngStream c(42, 7, 10);
  RngStream d(42, 7);
  for (int i = 0; i < 10; ++i) d.next_block();
  EXPECT_EQ(c.uniform(), d.uniform());
}

TEST(RngStream, IncrementVariance) {
  RngStream s(1, 0);
  const double dt = 0.01;
  const int n = 1'000'000;
  const auto inc = brownian_increments(s, n, dt);
  double sum = 0.0, sum2 = 0.0;
  for (double x : inc) {
    sum += x;
    sum2 += x * x;
  }
  const double var = sum2 / n - (sum / n) * (sum / n);
  // Sample variance of n normals has standard deviation dt * sqrt(2/n).
  EXPECT_LT(std::abs(var - dt), 4.0 * dt * std::sqrt(2.0 / n));
  EXPECT_LT(std::abs(sum / n), 4.0 * std::sqrt(dt / n));
}

TEST(RngStream, StreamsUncorrelated) {
  RngStream a(42, 0), b(42, 1);
  const int n = 100'000;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = a.normal(), y = b.normal();
    sab += x * y;
    saa += x * x;
    sbb += y * y;
  }
  EXPECT_LT(std::abs(sab / std::sqrt(saa * sbb)), 0.01);
}

TEST(RngStream, UniformOpenInterval) {
  RngStream s(0, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = s.uniform();
    EXPECT_GT(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace isingff
