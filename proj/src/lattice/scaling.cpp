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

#include "isingff/lattice/scaling.hpp"

#include "isingff/cft/correlators.hpp"
#include "isingff/lattice/correlators.hpp"

#include <iomanip>
#include <stdexcept>

namespace isingff::lattice {

cft::ConformalChart vertical_strip_chart(double width) {
  if (!(width > 0.0)) throw std::invalid_argument("vertical_strip_chart: width must be positive");
  const std::complex<double> i{0.0, 1.0};
  return cft::ConformalChart::composition({cft::ConformalChart::moebius(i, 0.5 * width * i, 0.0, 1.0),
                                           cft::ConformalChart::horizontal_strip_to_H(width)});
}

ScalingReport scaling_limit_report(const std::vector<int>& widths, double beta, int height_factor) {
  if (height_factor < 1) throw std::invalid_argument("scaling_limit_report: height_factor < 1");
  ScalingReport report;
  const auto chart = vertical_strip_chart(1.0);
  for (int M : widths) {
    if (M < 1 || M > 6) throw std::invalid_argument("scaling_limit_report: need 1 <= M <= 6");
    const int N = height_factor * M;
    if (N < 4 * M) {
      report.warnings.push_back("M=" + std::to_string(M) + ": N=" + std::to_string(N) +
                                " < 4M, finite-height contamination");
    }
    const double delta = 1.0 / (2.0 * M);
    const auto geom = StripGeometry::make(M, N, beta, delta);
    const LatticeFermionState state(geom);
    const HalfInteger k = HalfInteger::from_twice(1);
    const int m1 = (M + 1) / 2;
    const int m0 = m1 - M;
    const LatticeInsertion fields[2] = {{k, m1, FermionKind::psi}, {k, m0, FermionKind::psi}};

    ScalingRow row;
    row.M = M;
    row.N = N;
    row.delta = delta;
    row.lattice_value = FermionNormalization::z_constant * state.correlator(fields) / delta;
    row.continuum = cft::two_point(chart, delta * std::complex<double>(k.value(), m1),
                                   delta * std::complex<double>(k.value(), m0));
    row.rel_error = std::abs(row.lattice_value - row.continuum) / std::abs(row.continuum);
    report.rows.push_back(row);
  }
  return report;
}

ScalingReport scaling_limit_report(const std::vector<int>& widths) {
  return scaling_limit_report(widths, critical_beta());
}

void write_scaling_csv(std::ostream& out, const ScalingReport& report) {
  out << "M,delta,lattice_value_re,lattice_value_im,continuum_re,continuum_im,rel_error\n";
  out << std::setprecision(12);
  for (const auto& r : report.rows) {
    out << r.M << ',' << r.delta << ',' << r.lattice_value.real() << ',' << r.lattice_value.imag()
        << ',' << r.continuum.real() << ',' << r.continuum.imag() << ',' << r.rel_error << '\n';
  }
}

}  // namespace isingff::lattice
