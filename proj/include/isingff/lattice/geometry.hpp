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

#include <Eigen/Dense>

#include <cstdint>

namespace isingff::lattice {

/// Dense complex row operator on the 2^(2M+1)-dimensional row space.
using RowOperator = Eigen::MatrixXcd;

/// Largest row space built by the dense routines.
inline constexpr Eigen::Index kMaxRowDimension = Eigen::Index{1} << 13;

/// -ln(sqrt(2) - 1) / 2 = ln(1 + sqrt(2)) / 2.
double critical_beta();

/// Strip with columns |j| <= M and rows |i| <= N, all-plus boundary.
struct StripGeometry {
  int M = 1;
  int N = 1;
  double beta = 0.0;
  double delta = 1.0;

  /// Throws std::invalid_argument if M < 0, N < 1, beta < 0, delta <= 0 or the
  /// row space exceeds kMaxRowDimension.
  static StripGeometry make(int M, int N, double beta, double delta = 1.0);

  int sites() const { return 2 * M + 1; }
  Eigen::Index dimension() const { return Eigen::Index{1} << sites(); }
};

/// Spin sigma_j in {+1, -1} of site j in basis state `index`. Site j = -M is
/// the most significant bit and bit value 0 means sigma = +1.
int spin_value(const StripGeometry& geom, Eigen::Index index, int j);

}  // namespace isingff::lattice
