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

#include "isingff/sle/loewner.hpp"

#include "isingff/sle/partition_function.hpp"

#include <cmath>
#include <stdexcept>

namespace isingff::sle {

namespace {

using Complex = std::complex<double>;

bool swallowed(const LoewnerEnsemble& ens) {
  for (const auto& p : ens.tracked) {
    for (double x : ens.X) {
      if (std::abs(p.g - x) < ens.cfg.swallow_eps) return true;
    }
  }
  return false;
}

// Index of the first driving point to the right of a real value.
std::size_t side(const LoewnerEnsemble& ens, double g) {
  std::size_t s = 0;
  while (s < ens.X.size() && ens.X[s] < g) ++s;
  return s;
}

}  // namespace

LoewnerEnsemble LoewnerEnsemble::make(std::vector<double> X, std::span<const Complex> points,
                                      const LoewnerConfig& cfg, RngStream rng) {
  if (X.empty() || (X.size() > 1 && X.size() % 2 == 1)) {
    throw std::invalid_argument("LoewnerEnsemble: need 2n driving points or one");
  }
  for (std::size_t i = 1; i < X.size(); ++i) {
    if (!(X[i - 1] < X[i])) throw std::invalid_argument("LoewnerEnsemble: X must be increasing");
  }
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("LoewnerEnsemble: dt must be positive");
  LoewnerEnsemble ens{0.0, std::move(X), {}, cfg, rng};
  for (auto w : points) {
    if (w.imag() < 0.0) throw std::invalid_argument("LoewnerEnsemble: points must lie in the closed upper half plane");
    ens.tracked.push_back({w, w, 1.0});
  }
  return ens;
}

std::vector<double> driving_drift(std::span<const double> X, const LoewnerConfig& cfg) {
  std::vector<double> b(X.size(), 0.0);
  if (cfg.partition_drift && X.size() >= 2) {
    const auto grad = log_gradient(X);
    for (std::size_t i = 0; i < X.size(); ++i) b[i] += kKappa * grad[i];
  }
  if (cfg.interaction_drift) {
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (std::size_t l = 0; l < X.size(); ++l) {
        if (l != i) b[i] += 2.0 / (X[i] - X[l]);
      }
    }
  }
  return b;
}

void evolve(LoewnerEnsemble& ens, int steps) {
  const double dt = ens.cfg.dt;
  const double sigma = std::sqrt(kKappa * dt);
  std::vector<std::size_t> sides;
  for (const auto& p : ens.tracked) sides.push_back(p.g.imag() == 0.0 ? side(ens, p.g.real()) : 0);

  for (int step = 0; step < steps && ens.status == PathStatus::alive; ++step) {
    if (swallowed(ens)) {
      ens.status = PathStatus::swallowed;
      break;
    }
    for (auto& p : ens.tracked) {
      for (double x : ens.X) {
        const Complex u = p.g - x;
        Complex r = std::sqrt(u * u + 4.0 * dt);
        // The branch continuous in dt, the one nearer u.
        if (std::real(r * std::conj(u)) < 0.0) r = -r;
        p.g_prime *= u / r;
        p.g = x + r;
      }
    }
    const auto b = driving_drift(ens.X, ens.cfg);
    for (std::size_t i = 0; i < ens.X.size(); ++i) {
      ens.X[i] += b[i] * dt;
      if (ens.cfg.noise) ens.X[i] += sigma * ens.rng.normal();
    }
    ens.t += dt;
    for (std::size_t i = 1; i < ens.X.size(); ++i) {
      if (!(ens.X[i - 1] < ens.X[i])) ens.status = PathStatus::collided;
    }
    for (std::size_t k = 0; k < ens.tracked.size(); ++k) {
      const auto& p = ens.tracked[k];
      if (p.g.imag() == 0.0 && side(ens, p.g.real()) != sides[k]) ens.status = PathStatus::swallowed;
    }
  }
}

}  // namespace isingff::sle
