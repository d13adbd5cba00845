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

#include <string>
#include <vector>

namespace isingff::cft {

enum class OpePair { psi_psi, T_psi, T_T };

std::string to_string(OpePair pair);

/// Probe geometry: the merging pair sits at base + eps * direction and base;
/// spectators are primary fermions. Spectator parity must make the correlator even.
struct OpeProbe {
  Complex base;
  std::vector<Complex> spectators;
  Complex direction = 1.0;
  std::vector<double> eps = {1e-1, 1e-2, 1e-3};
};

/// Probe inside H, inside the strip 0 < Im z < 1, and away from the cut of sqrt g'
/// for the test charts.
OpeProbe default_probe(OpePair pair);

struct OpeReport {
  OpePair pair;
  std::string chart_kind;
  std::vector<double> eps;
  /// Product correlator minus the singular template, per eps.
  std::vector<Complex> remainders;
  Complex expected_leading;
  /// Coefficient of the most singular power from the two smallest eps (one
  /// Richardson step), after subtracting the lower singular templates.
  Complex fitted_leading;
  double leading_error;
  /// max |remainder| over eps.
  double max_deviation;
  /// |remainder(eps_min)| / max(|remainder(eps_max)|, 1).
  double growth;
  bool bounded;
  /// T_psi only: remainder at the smallest eps next to (3/4)<d^2 psi(w) ...>.
  Complex regular_fit;
  Complex regular_display;
};

OpeReport ope_singularity_check(const ConformalChart& chart, OpePair pair, const OpeProbe& probe);
OpeReport ope_singularity_check(const ConformalChart& chart, OpePair pair);

}  // namespace isingff::cft
