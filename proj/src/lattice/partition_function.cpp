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

#include "isingff/lattice/partition_function.hpp"

#include "isingff/lattice/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace isingff::lattice {

double partition_function(const StripGeometry& geom) {
  const auto t = transfer_matrices(geom);
  const Eigen::VectorXd half = t.v1_diagonal.cwiseSqrt();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(geom.dimension());
  x(0) = half(0);
  for (int step = 0; step < 2 * geom.N; ++step) x = t.vm * x;
  return half(0) * x(0);
}

double partition_function_enum(const StripGeometry& geom) {
  if ((2 * geom.M + 1) * (2 * geom.N + 1) > 25) {
    throw std::invalid_argument("partition_function_enum: (2M+1)(2N+1) exceeds 25");
  }
  const int width = 2 * geom.M + 1;
  const int height = 2 * geom.N + 1;
  std::vector<int> free_sites;
  for (int r = 1; r + 1 < height; ++r) {
    for (int c = 1; c + 1 < width; ++c) free_sites.push_back(r * width + c);
  }
  std::vector<int> spin(static_cast<std::size_t>(width * height), 1);
  auto at = [&](int r, int c) { return spin[static_cast<std::size_t>(r * width + c)]; };

  const auto n_free = free_sites.size();
  double z = 0.0;
  for (std::uint64_t config = 0; config < (std::uint64_t{1} << n_free); ++config) {
    for (std::size_t s = 0; s < n_free; ++s) {
      spin[static_cast<std::size_t>(free_sites[s])] = ((config >> s) & 1) ? -1 : 1;
    }
    double energy = 0.0;
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c + 1 < width; ++c) energy += at(r, c) * at(r, c + 1);
    }
    // The b -> infinity limit freezes the boundary columns, so only interior
    // columns carry vertical couplings.
    for (int r = 0; r + 1 < height; ++r) {
      for (int c = 1; c + 1 < width; ++c) energy += at(r, c) * at(r + 1, c);
    }
    z += std::exp(geom.beta * energy);
  }
  return z;
}

}  // namespace isingff::lattice
