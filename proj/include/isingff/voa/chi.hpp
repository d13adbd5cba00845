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
#include "isingff/voa/fock.hpp"

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace isingff::voa {

/// state = sum_s c_s L_{-k_1} ... L_{-k_r} base with base psi_{-1/2}|0> (odd
/// states) or |0> (even states).
struct VirasoroDecomposition {
  bool odd = true;
  std::vector<std::pair<std::vector<int>, Rational>> strings;
};

/// Solves for the L-string coefficients level by level with exact rational
/// elimination. Throws std::invalid_argument for mixed-parity states or states
/// outside the span.
VirasoroDecomposition virasoro_decomposition(const FockVector& state);

enum class ChiRoute {
  /// virasoro when it applies, wick otherwise.
  automatic,
  /// Identity chart, one descendant slot, all other slots multiples of psi:
  /// the descendant is reduced by differential operators acting on the
  /// Pfaffian of the remaining fields.
  virasoro,
  /// Each monomial slot becomes a normal-ordered product of d^k psi / k! and
  /// the whole correlator is one Pfaffian.
  wick,
};

struct ChiResult {
  std::complex<double> value;
  /// Set when the total fermion parity is odd; value is then 0.
  bool odd_parity = false;
  ChiRoute route = ChiRoute::wick;
};

/// chi(u_1 (x) ... (x) u_n)(z_1, ..., z_n) on the domain of `chart`.
ChiResult chi_correlator(std::span<const FockVector> states,
                         std::span<const std::complex<double>> points,
                         const cft::ConformalChart& chart, ChiRoute route = ChiRoute::automatic);

}  // namespace isingff::voa
