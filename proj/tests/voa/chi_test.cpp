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

#include "isingff/voa/chi.hpp"

#include "isingff/cft/correlators.hpp"
#include "isingff/numerics/finite_difference.hpp"
#include "isingff/voa/modes.hpp"

#include <gtest/gtest.h>

using namespace isingff;
using voa::FockVector;
using voa::Rational;
using Complex = std::complex<double>;

namespace {

const Complex kI{0.0, 1.0};

FockVector psi() { return FockVector::monomial({1}); }

FockVector descendant(std::vector<int> ks) {
  voa::TruncationConfig cfg;
  cfg.twice_L = 20;
  return voa::apply_virasoro_string(ks, psi(), cfg);
}

cft::ConformalChart curved() {
  return cft::ConformalChart::composition(
      {cft::ConformalChart::moebius(kI, 0.5 * kI, 0.0, 1.0), cft::ConformalChart::horizontal_strip_to_H(1.0)});
}

}  // namespace

TEST(VirasoroDecomposition, PsiSectorIsSpanned) {
  for (const auto& b : voa::basis_states(11)) {
    if (b.size() % 2 == 0) continue;
    const auto state = FockVector::monomial(b);
    const auto d = voa::virasoro_decomposition(state);
    EXPECT_TRUE(d.odd);
    FockVector rebuilt;
    for (const auto& [ks, c] : d.strings) rebuilt += c * descendant(ks);
    EXPECT_EQ(rebuilt, state);
  }
}

TEST(VirasoroDecomposition, VacuumSector) {
  const auto d = voa::virasoro_decomposition(FockVector::monomial({3, 1}));
  EXPECT_FALSE(d.odd);
  ASSERT_EQ(d.strings.size(), 1u);
  EXPECT_EQ(d.strings[0].first, std::vector<int>{2});
  EXPECT_EQ(d.strings[0].second, Rational(2));
}

TEST(VirasoroDecomposition, RejectsMixedParity) {
  EXPECT_THROW(voa::virasoro_decomposition(psi() + FockVector::vacuum()), std::invalid_argument);
}

TEST(Chi, TwoPsiOnHalfPlane) {
  const FockVector states[2] = {psi(), psi()};
  const Complex points[2] = {kI, 2.0 * kI};
  const auto r = voa::chi_correlator(states, points, cft::ConformalChart::identity());
  EXPECT_NEAR(std::abs(r.value - kI), 0.0, 1e-14);
  EXPECT_FALSE(r.odd_parity);
}

TEST(Chi, FourPsiIsPfaffian) {
  const FockVector states[4] = {psi(), psi(), psi(), psi()};
  const Complex points[4] = {{0.1, 0.5}, {-0.3, 1.2}, {0.7, 0.4}, {0.2, 2.0}};
  for (const auto& chart : {cft::ConformalChart::identity(), curved()}) {
    const auto r = voa::chi_correlator(states, points, chart);
    const auto expected = cft::npoint(chart, points);
    EXPECT_NEAR(std::abs(r.value - expected), 0.0, 1e-12 * std::abs(expected));
  }
}

TEST(Chi, OddParityFlagged) {
  const FockVector states[3] = {psi(), psi(), descendant({1})};
  const Complex points[3] = {kI, 2.0 * kI, 3.0 * kI};
  const auto r = voa::chi_correlator(states, points, cft::ConformalChart::identity());
  EXPECT_TRUE(r.odd_parity);
  EXPECT_EQ(r.value, Complex(0.0));
}

TEST(Chi, L1BecomesDerivative) {
  const Complex z0{0.2, 0.7}, w{-0.4, 1.1};
  for (const auto& chart : {cft::ConformalChart::identity(), curved()}) {
    const FockVector states[2] = {descendant({1}), psi()};
    const Complex points[2] = {z0, w};
    const auto lhs = voa::chi_correlator(states, points, chart).value;
    const auto rhs = central_diff(
        [&](Complex z) {
          const Complex p[2] = {z, w};
          return cft::npoint(chart, p);
        },
        z0, 1);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-7 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(Chi, RoutesAgreeOnHalfPlane) {
  const Complex points[4] = {{0.2, 0.7}, {-0.4, 1.1}, {0.9, 0.3}, {0.1, 1.9}};
  for (const auto& ks : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {3}, {2, 1}, {4}, {2, 2}}) {
    for (std::size_t slot : {0u, 2u}) {
      FockVector states[4] = {psi(), Rational(2) * psi(), psi(), psi()};
      states[slot] = descendant(ks);
      const auto v = voa::chi_correlator(states, points, cft::ConformalChart::identity(), voa::ChiRoute::virasoro);
      const auto w = voa::chi_correlator(states, points, cft::ConformalChart::identity(), voa::ChiRoute::wick);
      EXPECT_EQ(v.route, voa::ChiRoute::virasoro);
      EXPECT_NEAR(std::abs(v.value - w.value), 0.0, 1e-9 * std::max(1.0, std::abs(w.value)))
          << ks.size() << " " << slot;
    }
  }
}

TEST(Chi, SingularVectorDecouples) {
  const auto cfg = voa::TruncationConfig::make(3);
  FockVector states[2] = {voa::singular_vector(-1, cfg), psi()};
  const Complex points[2] = {{0.2, 0.7}, {-0.4, 1.1}};
  EXPECT_EQ(voa::chi_correlator(states, points, cft::ConformalChart::identity()).value, Complex(0.0));
  // The same combination built from strings, evaluated by differential operators.
  const auto two = voa::virasoro_decomposition(descendant({2}));
  EXPECT_EQ(two.strings.size(), 1u);
}

TEST(Chi, OpeConsistency) {
  // chi(psi(z + e) psi(z) X) - chi(|0>(z) X)/e stays bounded as e -> 0.
  const Complex z{0.1, 0.8};
  const Complex w1{-0.5, 1.3}, w2{0.6, 0.5};
  double previous = 0.0;
  for (double e : {1e-1, 1e-2, 1e-3}) {
    const FockVector four[4] = {psi(), psi(), psi(), psi()};
    const Complex p4[4] = {z + e, z, w1, w2};
    const FockVector three[3] = {FockVector::vacuum(), psi(), psi()};
    const Complex p3[3] = {z, w1, w2};
    const auto id = cft::ConformalChart::identity();
    const auto rem = voa::chi_correlator(four, p4, id).value - voa::chi_correlator(three, p3, id).value / e;
    if (previous > 0.0) {
      EXPECT_LT(std::abs(rem), 2.0 * previous);
    }
    previous = std::abs(rem);
    EXPECT_LT(previous, 10.0);
  }
}

TEST(Chi, RejectsVirasoroRouteOnCurvedChart) {
  const FockVector states[2] = {descendant({2}), psi()};
  const Complex points[2] = {{0.2, 0.7}, {-0.4, 1.1}};
  EXPECT_THROW(voa::chi_correlator(states, points, curved(), voa::ChiRoute::virasoro),
               std::invalid_argument);
  EXPECT_EQ(voa::chi_correlator(states, points, curved()).route, voa::ChiRoute::wick);
}
