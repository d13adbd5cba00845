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

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace isingff::lattice {

/// Fermion normalizations used throughout: A_psi = (-i - 1)/sqrt(2),
/// A_psibar = conj(A_psi) and the constant Z = -pi/2 relating fermions to the
/// parafermionic observables.
struct FermionNormalization {
  static std::complex<double> a_psi() { return {-std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2}; }
  static std::complex<double> a_psibar() { return std::conj(a_psi()); }
  static constexpr double z_constant = -std::numbers::pi / 2;
};

enum class FermionKind { psi, psibar };

/// Fermion at the midpoint (k, m) of a horizontal edge: half-integer column k,
/// integer row m.
struct LatticeInsertion {
  HalfInteger k;
  int m = 0;
  FermionKind kind = FermionKind::psi;
};

/// Spectral data of V_M and the boundary state, reused across correlators.
class LatticeFermionState {
 public:
  /// Requires beta > 0 (V_M is singular at beta = 0) and M >= 1.
  explicit LatticeFermionState(const StripGeometry& geom);

  const StripGeometry& geometry() const { return geom_; }

  /// (1/Z) <++| T prod psi(z_i) |++> with psi(k + i m) = V_M^{-m} psi_k V_M^m and
  /// |++> = V_M^N V1^{1/2} |e+>. T orders rows decreasingly from left to right
  /// with the sign of the permutation, so the result is antisymmetric in the
  /// insertions.
  std::complex<double> correlator(std::span<const LatticeInsertion> fields) const;

  /// Pfaffian of the table of two-point functions.
  std::complex<double> pfaffian_correlator(std::span<const LatticeInsertion> fields) const;

 private:
  Eigen::VectorXcd power(const Eigen::VectorXcd& x, int exponent) const;
  Eigen::VectorXcd apply_field(const LatticeInsertion& f, const Eigen::VectorXcd& x) const;

  StripGeometry geom_;
  Eigen::MatrixXd basis_;
  Eigen::VectorXd scaled_eigenvalues_;
  Eigen::VectorXcd start_;  // V1^{1/2} |e+>
  double norm_ = 0.0;
};

std::complex<double> lattice_fermion_correlator(const StripGeometry& geom,
                                                std::span<const LatticeInsertion> fields);

struct Parafermion {
  std::complex<double> up;
  std::complex<double> down;
};

/// Solves <psi psi> = 2 A^2 Z (F_up - F_down), <psi psibar> = 2 i A conj(A) Z (F_up + F_down).
Parafermion parafermion_from_values(std::complex<double> psi_psi, std::complex<double> psi_psibar);
/// Inverse of parafermion_from_values: returns {<psi psi>, <psi psibar>}.
std::pair<std::complex<double>, std::complex<double>> correlators_from_parafermion(
    const Parafermion& f);

/// Parafermionic observable from the lattice correlators <psi(z) psi(z')> and
/// <psi(z) psibar(z')>, with z' the later row written on the left.
Parafermion parafermion_from_correlators(const LatticeFermionState& state, HalfInteger k, int m,
                                         HalfInteger kp, int mp);

}  // namespace isingff::lattice
