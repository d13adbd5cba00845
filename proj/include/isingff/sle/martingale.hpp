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

#include "isingff/sle/loewner.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace isingff::sle {

struct ObservableSpec {
  /// 2n curve seeds, strictly increasing.
  std::vector<double> boundary_points;
  /// m fermion insertions in the closed upper half plane.
  std::vector<std::complex<double>> field_points;

  /// Throws std::invalid_argument for coincident points or field points
  /// closer than swallow_eps to a seed.
  void validate(double swallow_eps) const;
};

/// prod_k g'(W_k)^{1/2} <psi(X_1) ... psi(X_2n) psi(g(W_1)) ... psi(g(W_m))>_H / Z(X).
/// Throws std::logic_error on a path that is no longer alive.
std::complex<double> observable(const LoewnerEnsemble& ens);

/// Ensemble for `spec` with its own Philox stream.
LoewnerEnsemble make_ensemble(const ObservableSpec& spec, const LoewnerConfig& cfg,
                              std::uint64_t seed, std::uint64_t stream_id);

struct Checkpoint {
  double t = 0.0;
  std::complex<double> mean;
  double standard_error = 0.0;
  double z_score = 0.0;
  int alive = 0;
};

struct MartingaleReport {
  std::complex<double> initial;
  std::vector<Checkpoint> checkpoints;
  int paths = 0;
  int swallowed = 0;
  double swallowed_fraction() const { return paths > 0 ? static_cast<double>(swallowed) / paths : 0.0; }
  /// |z| < 3 at every checkpoint.
  bool martingale_holds() const;
  /// Swallowed fraction below 5%.
  bool conclusive() const { return swallowed_fraction() < 0.05; }
};

/// Simulates `paths` independent ensembles (stream id = path index) to t_max and
/// compares the observable's sample mean at `checkpoints` evenly spaced times
/// with its initial value. Paths that stop early are excluded. The reported
/// z-score is the larger in magnitude of the real and imaginary parts'. Paths run on ISINGFF_THREADS threads
/// (default hardware concurrency); results do not depend on the count.
MartingaleReport martingale_mc_test(const ObservableSpec& spec, const LoewnerConfig& cfg, int paths,
                                    double t_max, std::uint64_t seed, int checkpoints = 5);

/// Runs f(i) for i in [0, n) on the configured number of threads.
void parallel_for(int n, const std::function<void(int)>& f);

}  // namespace isingff::sle
