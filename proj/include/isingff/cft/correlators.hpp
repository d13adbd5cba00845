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
#include <utility>
#include <vector>

namespace isingff::cft {

/// f_up(z, z') = (i/2pi)(1/(z - z') + 1/(z - conj z')) on H.
Complex f_up_halfplane(Complex z, Complex zp);
/// f_down(z, z') = (i/2pi)(-1/(z - z') + 1/(z - conj z')) on H.
Complex f_down_halfplane(Complex z, Complex zp);

/// sqrt(g'(z)) sqrt(g'(w)) / (g(z) - g(w)), principal branch of each root.
Complex two_point(const ConformalChart& chart, Complex z, Complex w);

/// d^a/dz^a d^b/dw^b of two_point, from exact Taylor jets of the chart.
Complex kernel_derivative(const ConformalChart& chart, Complex z, Complex w, int a, int b);

/// lim d^a/dx^a d^b/dy^b [two_point(z + x, z + y) - 1/(x - y)] at x = y = 0:
/// the contraction inside a normal-ordered product at z. Zero on the identity chart.
Complex regular_part(const ConformalChart& chart, Complex z, int a, int b);

/// Pfaffian of the two_point table.
Complex npoint(const ConformalChart& chart, std::span<const Complex> points);

/// Signed sum over perfect pairings; reference for npoint, at most 10 points.
Complex wick_pairing_oracle(const ConformalChart& chart, std::span<const Complex> points);

/// d^order psi at point.
struct FieldInsertion {
  Complex point;
  int order = 0;
};

/// <prod_i d^{a_i} psi(p_i)>_D by the Pfaffian formula. Each index pair in
/// `normal_ordered` belongs to one normal-ordered product at a common point and is
/// contracted with regular_part instead of the kernel.
Complex fermion_correlator(const ConformalChart& chart, std::span<const FieldInsertion> fields,
                           std::span<const std::pair<int, int>> normal_ordered = {});

struct CorrelatorRequest {
  ConformalChart chart;
  std::vector<Complex> points;
  std::vector<int> derivative_orders;

  /// Throws std::invalid_argument on size mismatch, orders outside [0, 3],
  /// or coincident points.
  void validate() const;
};

/// Mixed partial of npoint by nested central differences.
Complex derivative_correlator(const CorrelatorRequest& request);
/// Same quantity from the Pfaffian of differentiated kernels.
Complex derivative_correlator_exact(const CorrelatorRequest& request);

/// <T(t_1) ... T(t_k) prod fields>_D with T = -(1/2):psi d psi: expanded by Wick's
/// formula; the self-contraction of each T is regular_part(chart, t, 0, 1).
Complex virasoro_correlator(const ConformalChart& chart, std::span<const Complex> t_points,
                            std::span<const FieldInsertion> fields);

/// <T(z) prod fields>_D from the subtracted limit
/// -(1/2)[d_w <psi(z) psi(w) X> - <X>/(z - w)^2] at w = z + eta, extrapolated
/// in eta from eta, eta/2, eta/4.
Complex virasoro_insertion_limit(const ConformalChart& chart, Complex z,
                                 std::span<const FieldInsertion> fields, double eta = 1e-4);

}  // namespace isingff::cft
