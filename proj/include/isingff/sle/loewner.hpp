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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace isingff::sle {

struct TrackedPoint {
  std::complex<double> w;
  std::complex<double> g;
  std::complex<double> g_prime{1.0, 0.0};
};

struct LoewnerConfig {
  double dt = 1e-4;
  double swallow_eps = 1e-3;
  /// 3 d_i log Z in the driving drift.
  bool partition_drift = true;
  /// sum_{l != i} 2/(X^i - X^l) in the driving drift; off for the broken-drift control.
  bool interaction_drift = true;
  /// sqrt(kappa) dB^i; off gives the deterministic test hook.
  bool noise = true;
};

enum class PathStatus { alive, swallowed, collided };

/// 2n driving points growing curves simultaneously, with tracked points.
struct LoewnerEnsemble {
  double t = 0.0;
  std::vector<double> X;
  std::vector<TrackedPoint> tracked;
  LoewnerConfig cfg;
  RngStream rng{0, 0};
  PathStatus status = PathStatus::alive;

  /// Throws std::invalid_argument unless X is strictly increasing with an even
  /// number of entries (or a single entry, the one-curve test hook), dt > 0 and
  /// tracked points are in the closed upper half plane.
  static LoewnerEnsemble make(std::vector<double> X, std::span<const std::complex<double>> points,
                              const LoewnerConfig& cfg, RngStream rng);
};

/// Drift of every driving point: 3 d_i log Z + sum_{l != i} 2/(X^i - X^l), each
/// part switched by cfg.
std::vector<double> driving_drift(std::span<const double> X, const LoewnerConfig& cfg);

/// Advances `steps` steps of size cfg.dt. Each driving point's slit map
/// g -> X + sqrt((g - X)^2 + 4 dt) is applied exactly, one point after another
/// (Lie splitting of dg = sum_i 2/(g - X^i) dt), together with its derivative;
/// X then takes an Euler-Maruyama step. The path stops, with status set, when a
/// tracked point comes within swallow_eps of a driving point, a real tracked
/// point changes side, or two driving points meet.
void evolve(LoewnerEnsemble& ens, int steps);

}  // namespace isingff::sle
