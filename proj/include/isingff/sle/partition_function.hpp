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

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace isingff::sle {

/// kappa = 3 throughout.
inline constexpr double kKappa = 3.0;

/// Central charge (3 kappa - 8)(6 - kappa)/(2 kappa) and boundary weight
/// (6 - kappa)/(2 kappa); both equal 1/2 at kappa = 3.
double central_charge(double kappa);
double boundary_weight(double kappa);

/// Pf[1/(x_i - x_j)] for 2n strictly increasing points.
double partition_function(std::span<const double> xs);
/// The same Pfaffian at complex arguments, used for finite differences.
std::complex<double> partition_function(std::span<const std::complex<double>> xs);

/// d/dx_i log|Z| from (1/2) tr(A^{-1} dA/dx_i), A_ij = 1/(x_i - x_j).
std::vector<double> log_gradient(std::span<const double> xs);

struct PdeResidual {
  std::string name;
  double residual = 0.0;
  /// Sum of |terms|, the scale the residual is compared against.
  double scale = 0.0;
  double relative() const { return scale > 0.0 ? residual / scale : residual; }
};

/// Finite-difference residuals of the translation, scaling and special
/// conformal equations and of the second-order equation at every x_i:
/// [(3/4) d_i^2 + sum_{j != i} (1/(x_j - x_i) d_j - (1/2)/(x_j - x_i)^2)] Z = 0.
std::vector<PdeResidual> pde_residuals(std::span<const double> xs);

}  // namespace isingff::sle
