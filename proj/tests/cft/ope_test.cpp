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

#include "isingff/cft/ope.hpp"
#include "test_charts.hpp"

#include <gtest/gtest.h>

namespace isingff::cft {
namespace {

using testing::half_plane_moebius;
using testing::unit_strip;
using testing::vertical_strip;

TEST(Ope, IdentityChart) {
  const auto id = ConformalChart::identity();
  for (auto pair : {OpePair::psi_psi, OpePair::T_psi, OpePair::T_T}) {
    const auto r = ope_singularity_check(id, pair);
    EXPECT_TRUE(r.bounded) << to_string(pair) << " growth " << r.growth;
    EXPECT_LT(r.leading_error, 1e-4) << to_string(pair);
  }
}

TEST(Ope, FermionPairOnMoebius) {
  const auto r = ope_singularity_check(half_plane_moebius(), OpePair::psi_psi);
  EXPECT_TRUE(r.bounded);
  EXPECT_LT(r.leading_error, 1e-4);
}

TEST(Ope, StressTensorLeadingCoefficient) {
  auto probe = default_probe(OpePair::T_T);
  probe.spectators.clear();
  const auto r = ope_singularity_check(ConformalChart::identity(), OpePair::T_T, probe);
  EXPECT_LT(std::abs(r.fitted_leading - 0.25), 1e-4);
}

TEST(Ope, CurvedChartsKeepSingularParts) {
  for (const auto& chart : {half_plane_moebius(), unit_strip(), vertical_strip()}) {
    for (auto pair : {OpePair::psi_psi, OpePair::T_psi, OpePair::T_T}) {
      const auto r = ope_singularity_check(chart, pair);
      EXPECT_TRUE(r.bounded) << chart.kind_name() << " " << to_string(pair) << " growth " << r.growth;
      EXPECT_LT(r.leading_error, 1e-4) << chart.kind_name() << " " << to_string(pair);
    }
  }
}

TEST(Ope, RegularTermOfFermionProduct) {
  // On H the constant term of T(z) psi(w) is (L_{-2} psi)(w) = (3/4) d^2 psi(w).
  const auto r = ope_singularity_check(ConformalChart::identity(), OpePair::T_psi);
  EXPECT_LT(std::abs(r.regular_fit - r.regular_display), 1e-2 * std::abs(r.regular_display));
}

TEST(Ope, ParityGuard) {
  OpeProbe probe = default_probe(OpePair::psi_psi);
  EXPECT_THROW(ope_singularity_check(ConformalChart::identity(), OpePair::T_psi, probe),
               std::invalid_argument);
}

}  // namespace
}  // namespace isingff::cft
