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

#include "isingff/numerics/pfaffian.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <random>

namespace isingff {
namespace {

using Complex = std::complex<double>;

Eigen::MatrixXcd random_skew(int n, std::mt19937& gen) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = Complex(normal(gen), normal(gen));
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

TEST(Pfaffian, TwoByTwo) {
  Eigen::MatrixXd m(2, 2);
  m << 0, 2, -2, 0;
  EXPECT_DOUBLE_EQ(pfaffian(SkewMatrix<double>(m)), 2.0);
}

TEST(Pfaffian, FourByFour) {
  // Pf = af - be + cd with (a..f) = (1..6).
  const double v[] = {1, 2, 3, 4, 5, 6};
  int t = 0;
  auto skew = SkewMatrix<double>::from_upper(4, [&](Eigen::Index, Eigen::Index) { return v[t++]; });
  EXPECT_NEAR(pfaffian(skew), 8.0, 1e-12);
  EXPECT_NEAR(pfaffian_oracle(skew), 8.0, 1e-12);
}

TEST(Pfaffian, OddAndEmpty) {
  std::mt19937 gen(3);
  EXPECT_EQ(pfaffian(SkewMatrix<Complex>(random_skew(3, gen))), Complex(0.0));
  EXPECT_EQ(pfaffian(SkewMatrix<Complex>(Eigen::MatrixXcd(0, 0))), Complex(1.0));
}

TEST(Pfaffian, RejectsNonSkew) {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 1, 0;
  EXPECT_THROW(SkewMatrix<double>{m}, std::invalid_argument);
}

TEST(Pfaffian, SquareIsDeterminant) {
  std::mt19937 gen(11);
  for (int n = 2; n <= 10; n += 2) {
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::MatrixXcd m = random_skew(n, gen);
      const Complex pf = pfaffian(SkewMatrix<Complex>(m));
      const Complex det = m.determinant();
      EXPECT_LT(std::abs(pf * pf - det), 1e-9 * std::max(1.0, std::abs(det))) << "n=" << n;
    }
  }
}

TEST(Pfaffian, MatchesMatchingSum) {
  std::mt19937 gen(5);
  for (int n = 2; n <= 12; n += 2) {
    const SkewMatrix<Complex> skew(random_skew(n, gen));
    const Complex fast = pfaffian(skew);
    const Complex slow = pfaffian_oracle(skew);
    EXPECT_LT(std::abs(fast - slow), 1e-10 * std::max(1.0, std::abs(slow))) << "n=" << n;
  }
}

TEST(Pfaffian, SwapFlipsSign) {
  std::mt19937 gen(7);
  Eigen::MatrixXcd m = random_skew(6, gen);
  const Complex before = pfaffian(SkewMatrix<Complex>(m));
  m.row(1).swap(m.row(4));
  m.col(1).swap(m.col(4));
  const Complex after = pfaffian(SkewMatrix<Complex>(m));
  EXPECT_LT(std::abs(before + after), 1e-12 * std::abs(before));
}

TEST(Pfaffian, NeedsPivoting) {
  // Zero in the first pivot position.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m(0, 2) = 1.0;
  m(1, 3) = 1.0;
  m(2, 0) = -1.0;
  m(3, 1) = -1.0;
  const SkewMatrix<double> skew(m);
  EXPECT_NEAR(pfaffian(skew), pfaffian_oracle(skew), 1e-14);
  EXPECT_NEAR(pfaffian(skew), -1.0, 1e-14);
}

}  // namespace
}  // namespace isingff
