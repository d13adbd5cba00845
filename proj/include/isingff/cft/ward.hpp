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

#pragma once

#include "isingff/cft/chart.hpp"

#include <span>
#include <vector>

namespace isingff::cft {

struct WardReport {
  /// <T(z) prod psi(w_i)> from the subtracted-limit definition of T.
  Complex lhs;
  /// Differential-operator side of the identity.
  Complex rhs;
  /// Independent evaluation of the left side (Wick route on H, direct limit on D).
  Complex lhs_direct;
  /// Domain identity with the prefactor g'(w_i)^{-1} d/dw_i only, i.e. without the
  /// -g''(w_i)/(2 g'(w_i)) shift; equals rhs on H and for affine charts.
  Complex rhs_without_shift;
};

/// Ward identity on H: sum_i [(1/2)/(z - w_i)^2 + 1/(z - w_i) d/dw_i] <prod psi(w)>.
WardReport ward_halfplane(Complex z, std::span<const Complex> ws, double eta = 1e-4);

/// Ward identity on D = g^{-1}(H). The left side is transported from H:
/// g'(z)^2 <T(g z) prod psi(g w_i)>_H prod g'(w_i)^{1/2} + S_g(z)/24 <prod psi>_D.
WardReport ward_domain(const ConformalChart& chart, Complex z, std::span<const Complex> ws,
                       double eta = 1e-4);

/// Term-by-term value of the Ward identity expanded to first order around each
/// w_i (the fully expanded domain form). Diagnostic only: the expansion is
/// asymptotic in z - w_i.
struct ExpandedWardTerms {
  std::vector<Complex> per_point;
  Complex trailing;
  Complex total;
};
ExpandedWardTerms ward_domain_expanded(const ConformalChart& chart, Complex z,
                                       std::span<const Complex> ws);

}  // namespace isingff::cft
