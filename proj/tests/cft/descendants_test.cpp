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

#include "isingff/cft/descendants.hpp"
#include "isingff/cft/correlators.hpp"
#include "isingff/numerics/finite_difference.hpp"

#include <gtest/gtest.h>

#include <random>

namespace isingff::cft {
namespace {

constexpr Complex kI(0.0, 1.0);

std::vector<Complex> random_points(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.2, 2.0);
  std::vector<Complex> out;
  for (int i = 0; i < n; ++i) out.emplace_back(re(gen), im(gen));
  return out;
}

Complex primary(Complex z, std::span<const Complex> ws) {
  std::vector<Complex> pts = {z};
  pts.insert(pts.end(), ws.begin(), ws.end());
  return npoint(ConformalChart::identity(), pts);
}

TEST(Descendant, EmptyIsPrimary) {
  const auto ws = random_points(3, 1);
  const Complex z(0.1, 0.7);
  EXPECT_LT(std::abs(descendant_correlator({}, z, ws) - primary(z, ws)), 1e-15);
}

TEST(Descendant, LMinusOneIsDerivative) {
  const auto ws = random_points(3, 2);
  const Complex z(0.1, 0.7);
  const int k[1] = {1};
  const ComplexFunction f = [&](Complex x) { return primary(x, ws); };
  const Complex fd = central_diff(f, z, 1);
  EXPECT_LT(std::abs(descendant_correlator(k, z, ws) - fd), 1e-7 * std::max(1.0, std::abs(fd)));
}

TEST(Descendant, LevelTwoDegeneracy) {
  const Complex z = kI, w[1] = {2.0 * kI};
  const int l2[1] = {2};
  const int l11[2] = {1, 1};
  const Complex a = descendant_correlator(l2, z, w);
  const Complex b = descendant_correlator(l11, z, w);
  EXPECT_LT(std::abs(a - 0.75 * b), 1e-7);
  EXPECT_GT(std::abs(a), 0.1);
  const auto ws = random_points(5, 3);
  EXPECT_LT(std::abs(descendant_correlator(l2, z, ws) - 0.75 * descendant_correlator(l11, z, ws)),
            1e-9);
}

TEST(Descendant, LMinusTwoIsRegularPartOfOpe) {
  // (L_{-2} psi)(z) is the constant term of T(y) psi(z) as y -> z.
  const auto ws = random_points(3, 4);
  const Complex z(0.1, 0.7);
  std::vector<FieldInsertion> fields = {{z, 0}};
  for (auto w : ws) fields.push_back({w, 0});
  const auto id = ConformalChart::identity();
  const Complex f = fermion_correlator(id, fields);
  fields[0].order = 1;
  const Complex df = fermion_correlator(id, fields);
  fields[0].order = 0;
  auto regular = [&](double eps) {
    const Complex d = eps * std::polar(1.0, 0.5);
    const Complex y[1] = {z + d};
    return virasoro_correlator(id, y, fields) - 0.5 * f / (d * d) - df / d;
  };
  const Complex limit = 2.0 * regular(5e-4) - regular(1e-3);
  const int l2[1] = {2};
  EXPECT_LT(std::abs(limit - descendant_correlator(l2, z, ws)), 1e-5);
}

TEST(Descendant, DerivativeSpectators) {
  const auto ws = random_points(3, 5);
  const Complex z(0.1, 0.7);
  const int ks[2] = {2, 1};
  const std::vector<FieldInsertion> others = {{ws[0], 1}, {ws[1], 0}, {ws[2], 0}};
  const ComplexFunction f = [&](Complex x) {
    const Complex moved[3] = {x, ws[1], ws[2]};
    return descendant_correlator(ks, z, moved);
  };
  const Complex fd = central_diff(f, ws[0], 1);
  EXPECT_LT(std::abs(descendant_correlator(ks, z, others) - fd), 1e-6 * std::max(1.0, std::abs(fd)));
}

TEST(NullField, ImaginaryAxis) {
  const Complex ws[1] = {2.0 * kI};
  EXPECT_LT(std::abs(null_field_residual(kI, ws)), 1e-12);
  EXPECT_LT(std::abs(null_field_residual(kI, ws, DerivativeMethod::finite_difference)), 1e-6);
  const Complex ws3[3] = {2.0 * kI, 3.0 * kI, 5.0 * kI};
  EXPECT_LT(std::abs(null_field_residual(kI, ws3, DerivativeMethod::finite_difference)), 1e-6);
}

TEST(NullField, RandomConfigurations) {
  for (unsigned seed = 0; seed < 20; ++seed) {
    for (int n : {1, 3, 5}) {
      const auto pts = random_points(n + 1, seed * 7 + static_cast<unsigned>(n));
      const std::span<const Complex> ws(pts.data() + 1, pts.size() - 1);
      const double scale = null_field_scale(pts[0], ws);
      EXPECT_LT(std::abs(null_field_residual(pts[0], ws)), 1e-10 * scale);
      EXPECT_LT(std::abs(null_field_residual(pts[0], ws, DerivativeMethod::finite_difference)),
                1e-5 * scale);
    }
  }
}

TEST(NullField, ScalingCovariance) {
  const auto pts = random_points(4, 8);
  std::vector<Complex> scaled;
  for (auto p : pts) scaled.push_back(2.0 * p);
  const std::span<const Complex> ws(pts.data() + 1, 3), ws2(scaled.data() + 1, 3);
  // Each term has degree -(n + 2) with n = 2 pairs.
  EXPECT_NEAR(null_field_scale(pts[0], ws) / null_field_scale(scaled[0], ws2), 16.0, 1e-9);
  EXPECT_LT(std::abs(null_field_residual(scaled[0], ws2)), 1e-10 * null_field_scale(scaled[0], ws2));
}

TEST(NullField, RejectsEvenSpectators) {
  const Complex ws[2] = {2.0 * kI, 3.0 * kI};
  EXPECT_THROW(null_field_residual(kI, ws), std::invalid_argument);
}

}  // namespace
}  // namespace isingff::cft
