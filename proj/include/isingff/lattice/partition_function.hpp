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

#include "isingff/lattice/geometry.hpp"

namespace isingff::lattice {

/// <e+| V1^{1/2} V_M^{2N} V1^{1/2} |e+> with all-plus boundary rows and columns.
double partition_function(const StripGeometry& geom);

/// Direct sum over interior spin configurations; requires (2M+1)(2N+1) <= 25.
double partition_function_enum(const StripGeometry& geom);

}  // namespace isingff::lattice
