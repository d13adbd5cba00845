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

#include "isingff/lattice/correlators.hpp"

#include <gtest/gtest.h>

namespace isingff::lattice {
namespace {

using Complex = std::complex<double>;

HalfInteger col(int twice) { return HalfInteger::from_twice(twice); }

TEST(LatticeFermions, CoincidentPoints) {
  const LatticeFermionState state(StripGeometry::make(1, 3, critical_beta()));
  const LatticeInsertion f[2] = {{col(1), 1}, {col(1), 1}};
  const Complex a = FermionNormalization::a_psi();
  EXPECT_LT(std::abs(state.correlator(f) - 2.0 * a * a), 1e-12);
  EXPECT_LT(std::abs(2.0 * a * a - Complex(0.0, 2.0)), 1e-15);
}

TEST(LatticeFermions, Antisymmetric) {
  const LatticeFermionState state(StripGeometry::make(2, 4, critical_beta()));
  const LatticeInsertion a = {col(-1), 2}, b = {col(3), 0}, c = {col(1), -1}, d = {col(-3), -2};
  const LatticeInsertion f[4] = {a, b, c, d};
  const LatticeInsertion g[4] = {a, c, b, d};
  const Complex x = state.correlator(f);
  EXPECT_GT(std::abs(x), 1e-6);
  EXPECT_LT(std::abs(x + state.correlator(g)), 1e-10 * std::abs(x));
}

TEST(LatticeFermions, PfaffianOfTwoPoints) {
  const LatticeFermionState state(StripGeometry::make(2, 4, 0.35));
  const LatticeInsertion f[6] = {{col(1), 3},  {col(-1), 2},  {col(3), 1, FermionKind::psibar},
                                 {col(-3), 0}, {col(1), -2}, {col(-1), -3, FermionKind::psibar}};
  for (std::size_t n : {2u, 4u, 6u}) {
    const std::span<const LatticeInsertion> s(f, n);
    const Complex direct = state.correlator(s);
    const Complex pf = state.pfaffian_correlator(s);
    EXPECT_LE(std::abs(direct - pf), 1e-8 * std::abs(direct)) << n;
  }
}

TEST(LatticeFermions, RejectsBadInput) {
  const LatticeFermionState state(StripGeometry::make(1, 2, 0.3));
  const LatticeInsertion odd[1] = {{col(1), 0}};
  EXPECT_THROW(state.correlator(odd), std::invalid_argument);
  const LatticeInsertion far[2] = {{col(1), 2}, {col(1), 0}};
  EXPECT_THROW(state.correlator(far), std::out_of_range);
  EXPECT_THROW(LatticeFermionState(StripGeometry::make(1, 2, 0.0)), std::invalid_argument);
}

TEST(Parafermion, RoundTrip) {
  const Complex c1(0.3, -1.2), c2(-0.7, 0.4);
  const auto f = parafermion_from_values(c1, c2);
  const auto [d1, d2] = correlators_from_parafermion(f);
  EXPECT_LT(std::abs(d1 - c1), 1e-12);
  EXPECT_LT(std::abs(d2 - c2), 1e-12);
}

TEST(Parafermion, SwapPattern) {
  // Negating <psi psi> exchanges the roles of up and down.
  const Complex c1(0.3, -1.2), c2(-0.7, 0.4);
  const auto f = parafermion_from_values(c1, c2);
  const auto g = parafermion_from_values(-c1, c2);
  EXPECT_LT(std::abs(g.up - f.down), 1e-15);
  EXPECT_LT(std::abs(g.down - f.up), 1e-15);
}

TEST(Parafermion, FromLattice) {
  const LatticeFermionState state(StripGeometry::make(2, 6, critical_beta()));
  const auto f = parafermion_from_correlators(state, col(1), 0, col(1), 2);
  const auto [c1, c2] = correlators_from_parafermion(f);
  const LatticeInsertion pp[2] = {{col(1), 2}, {col(1), 0}};
  EXPECT_LT(std::abs(c1 - state.correlator(pp)), 1e-12);
  EXPECT_TRUE(std::isfinite(c2.real()));
}

}  // namespace
}  // namespace isingff::lattice
