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

#include "isingff/numerics/finite_difference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isingff {

namespace {

bool finite(std::complex<double> z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::complex<double> plain_difference(const ComplexFunction& f, std::complex<double> z, int order,
                                      double h) {
  if (order == 1) return (f(z + h) - f(z - h)) / (2.0 * h);
  return (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h);
}

}  // namespace

double default_step(std::complex<double> z, int order) {
  const double scale = std::max(1.0, std::abs(z));
  return (order == 1 ? 1e-5 : 1e-3) * scale;
}

std::complex<double> central_diff(const ComplexFunction& f, std::complex<double> z, int order,
                                  std::optional<double> h) {
  if (order != 1 && order != 2) throw std::invalid_argument("central_diff: order must be 1 or 2");
  if (!finite(z)) throw std::invalid_argument("central_diff: non-finite evaluation point");
  const double step = h.value_or(default_step(z, order));
  if (!std::isfinite(step) || step <= 0.0) {
    throw std::invalid_argument("central_diff: step must be positive and finite");
  }
  const std::complex<double> coarse = plain_difference(f, z, order, step);
  const std::complex<double> fine = plain_difference(f, z, order, 0.5 * step);
  const std::complex<double> result = (4.0 * fine - coarse) / 3.0;
  if (!finite(result)) throw std::domain_error("central_diff: function is not finite near z");
  return result;
}

}  // namespace isingff
