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

#include "isingff/voa/fock.hpp"

namespace isingff::voa {

/// u_{(j)} v, the coefficient of z^{-j-1} in Y(u, z) v. For a monomial
/// u = psi_{-k-1/2} u' the field is the normal-ordered product of
/// d^k psi / k! with Y(u', z); psi_{(j)} = psi_{j+1/2} and Y(|0>, z) = 1.
/// Intermediate states are kept up to level L + level(u); the result is
/// truncated at L.
FockVector vertex_mode(const FockVector& u, int j, const FockVector& v, const TruncationConfig& cfg);

}  // namespace isingff::voa
