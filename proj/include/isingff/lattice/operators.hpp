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

#include "isingff/lattice/geometry.hpp"
#include "isingff/numerics/half_integer.hpp"

#include <cstdint>
#include <vector>

namespace isingff::lattice {

/// phase * X^x Z^z on the row space; bit (M - j) belongs to site j.
struct PauliString {
  std::uint32_t x_mask = 0;
  std::uint32_t z_mask = 0;
  std::complex<double> phase = 1.0;

  RowOperator dense(Eigen::Index dimension) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
};

PauliString spin_string(const StripGeometry& geom, int j);
/// p_k for k in {-M - 1/2, ..., M - 1/2}: X on sites left of k + 1/2, Z at k + 1/2.
PauliString clifford_p_string(const StripGeometry& geom, HalfInteger k);
/// q_k for k in {-M + 1/2, ..., M + 1/2}: X on sites left of k - 1/2, Y at k - 1/2.
PauliString clifford_q_string(const StripGeometry& geom, HalfInteger k);

std::vector<HalfInteger> p_modes(const StripGeometry& geom);
std::vector<HalfInteger> q_modes(const StripGeometry& geom);

struct SpinAndClifford {
  std::vector<RowOperator> sigma;  // index j + M
  std::vector<HalfInteger> p_modes;
  std::vector<RowOperator> p;
  std::vector<HalfInteger> q_modes;
  std::vector<RowOperator> q;
};

SpinAndClifford build_spin_and_clifford(const StripGeometry& geom);

/// Largest entry of {p_k,p_l} - 2 delta, {q_k,q_l} - 2 delta and {p_k,q_l}.
double clifford_relation_error(const SpinAndClifford& ops);

struct TransferMatrices {
  Eigen::VectorXd v1_diagonal;
  Eigen::MatrixXd v1;
  Eigen::MatrixXd v2plus;
  Eigen::MatrixXd vm;
};

TransferMatrices transfer_matrices(const StripGeometry& geom);

/// Max deviation from a bilinear-form-preserving rotation of the Clifford
/// generators under v -> V^{-1} v V. Throws std::domain_error if V is singular.
double induced_rotation_check(const StripGeometry& geom, const RowOperator& v);
/// Same check for V_M of `geom`.
double induced_rotation_check(const StripGeometry& geom);

}  // namespace isingff::lattice
