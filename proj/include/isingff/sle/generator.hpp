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

#include "isingff/numerics/rng.hpp"
#include "isingff/voa/fock.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace isingff::sle {

struct GeneratorConfig {
  /// Twice the truncation level of the Fock space.
  int twice_L = 8;
  double dt = 1e-4;
  double t_max = 0.3;
  int checkpoints = 5;
};

/// Odd-sector basis (descendants of psi_{-1/2}|0>) up to the truncation, with
/// the matrices of L_{-1} and of -2 L_{-2} + (3/2) L_{-1}^2 on it.
struct GeneratorOperators {
  std::vector<voa::Monomial> basis;
  Eigen::MatrixXd lm1;
  Eigen::MatrixXd drift;
  static GeneratorOperators make(int twice_L);
};

/// (-2 L_{-2} + (3/2) L_{-1}^2) psi_{-1/2}|0> in exact arithmetic; zero.
voa::FockVector generator_drift_on_psi();

struct GeneratorPath {
  std::vector<double> times;
  /// Coefficients of G_t psi_{-1/2}|0> in the basis, one vector per checkpoint.
  std::vector<Eigen::VectorXd> coefficients;
};

/// G_{k+1} = G_k (I + A dt - L_{-1} dxi) with A = -2 L_{-2} + (3/2) L_{-1}^2
/// and dxi = sqrt(3) dB, G_0 = I. L_{-k} raise the level, so G is
/// unitriangular in the grading and the truncated product is exact.
GeneratorPath evolve_martingale_generator(const GeneratorOperators& ops, const GeneratorConfig& cfg,
                                          RngStream rng);

struct GeneratorReport {
  std::vector<voa::Monomial> basis;
  std::vector<double> times;
  /// [checkpoint][coefficient].
  std::vector<std::vector<double>> mean, standard_error, z_score;
  Eigen::VectorXd initial;
  bool martingale_holds() const;
};

/// Monte Carlo means of every coefficient against the initial value; paths use
/// stream ids 0..paths-1.
GeneratorReport generator_mc_test(const GeneratorConfig& cfg, int paths, std::uint64_t seed);

}  // namespace isingff::sle
