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

#include <complex>
#include <functional>
#include <optional>

namespace isingff {

using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

/// Default step of central_diff: 1e-5 * max(1, |z|) for the first derivative and
/// 1e-3 * max(1, |z|) for the second.
double default_step(std::complex<double> z, int order);

/// Central difference of order 1 or 2 along the real direction, with one
/// Richardson extrapolation level (error O(h^4)).
std::complex<double> central_diff(const ComplexFunction& f, std::complex<double> z, int order,
                                  std::optional<double> h = std::nullopt);

}  // namespace isingff
