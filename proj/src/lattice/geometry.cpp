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

#include "isingff/lattice/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isingff::lattice {

double critical_beta() { return -0.5 * std::log(std::sqrt(2.0) - 1.0); }

StripGeometry StripGeometry::make(int M, int N, double beta, double delta) {
  if (M < 0) throw std::invalid_argument("StripGeometry: M must be >= 0");
  if (N < 1) throw std::invalid_argument("StripGeometry: N must be >= 1");
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("StripGeometry: beta must be finite and >= 0");
  }
  if (!(delta > 0.0)) throw std::invalid_argument("StripGeometry: delta must be > 0");
  if (2 * M + 1 > 13) {
    throw std::invalid_argument("StripGeometry: row space 2^" + std::to_string(2 * M + 1) +
                                " exceeds the dense guard 2^13");
  }
  return StripGeometry{M, N, beta, delta};
}

int spin_value(const StripGeometry& geom, Eigen::Index index, int j) {
  const int bit = geom.M - j;
  return ((index >> bit) & 1) ? -1 : 1;
}

}  // namespace isingff::lattice
