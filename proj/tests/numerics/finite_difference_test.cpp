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

#include "isingff/numerics/finite_difference.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace isingff {
namespace {

using Complex = std::complex<double>;

TEST(CentralDiff, Polynomial) {
  const auto cube = [](Complex z) { return z * z * z; };
  EXPECT_LT(std::abs(central_diff(cube, 2.0, 1) - 12.0), 1e-8);
  EXPECT_LT(std::abs(central_diff(cube, 2.0, 2) - 12.0), 1e-7);
}

TEST(CentralDiff, Reciprocal) {
  const auto inv = [](Complex z) { return 1.0 / z; };
  EXPECT_LT(std::abs(central_diff(inv, 2.0, 1) + 0.25), 1e-9);
  EXPECT_LT(std::abs(central_diff(inv, 2.0, 2) - 0.25), 1e-7);
}

TEST(CentralDiff, ComplexPoint) {
  const auto f = [](Complex z) { return std::exp(z) / (z + 3.0); };
  const Complex z(0.4, 1.3);
  const Complex exact = std::exp(z) / (z + 3.0) - std::exp(z) / ((z + 3.0) * (z + 3.0));
  EXPECT_LT(std::abs(central_diff(f, z, 1) - exact), 1e-9);
}

TEST(CentralDiff, RejectsBadArguments) {
  const auto f = [](Complex z) { return z; };
  EXPECT_THROW(central_diff(f, 1.0, 1, 0.0), std::invalid_argument);
  EXPECT_THROW(central_diff(f, 1.0, 1, -1e-3), std::invalid_argument);
  EXPECT_THROW(central_diff(f, 1.0, 3), std::invalid_argument);
  EXPECT_THROW(central_diff(f, Complex(std::numeric_limits<double>::infinity(), 0.0), 1),
               std::invalid_argument);
}

}  // namespace
}  // namespace isingff
