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

#include "isingff/cft/chart.hpp"

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace isingff::lattice {

/// Vertical strip {-w/2 < Re z < w/2} to H: z -> i(z + w/2), then exp(pi z / w).
cft::ConformalChart vertical_strip_chart(double width);

struct ScalingRow {
  int M = 0;
  int N = 0;
  double delta = 0.0;
  std::complex<double> lattice_value;
  std::complex<double> continuum;
  double rel_error = 0.0;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  std::vector<std::string> warnings;
};

/// Two-point function <psi(z1) psi(z0)> on a strip of physical width 1 (delta =
/// 1/(2M)) at column k = 1/2, rows m1 = (M + 1)/2 and m0 = m1 - M, against the
/// continuum kernel on the vertical strip. The lattice value is rescaled by
/// Z/delta with Z = -pi/2. height_factor sets N = height_factor * M; a warning
/// is recorded when N < 4M.
ScalingReport scaling_limit_report(const std::vector<int>& widths, double beta,
                                   int height_factor = 60);
ScalingReport scaling_limit_report(const std::vector<int>& widths);

/// Columns M, delta, lattice_value_re, lattice_value_im, continuum_re,
/// continuum_im, rel_error.
void write_scaling_csv(std::ostream& out, const ScalingReport& report);

}  // namespace isingff::lattice
