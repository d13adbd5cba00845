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

#include <span>
#include <string>
#include <vector>

namespace isingff::voa {

/// L_m v = -(1/2) sum_k (k + m/2) :psi_{m+k} psi_{-k}: v + a0 delta_{m,0} v.
FockVector apply_virasoro_mode(int m, const FockVector& v, const TruncationConfig& cfg);

/// L_{-k_1} ... L_{-k_r} v; the rightmost operator acts first.
FockVector apply_virasoro_string(std::span<const int> ks, const FockVector& v,
                                 const TruncationConfig& cfg);

/// (L_{-2} + sign (3/4) L_{-1}^2) psi_{-1/2}|0>.
FockVector singular_vector(int sign, const TruncationConfig& cfg);

struct CommutatorEntry {
  /// "psi" for [L_m, psi_n] + (m/2 + n) psi_{m+n}, "virasoro" for
  /// [L_m, L_n] - (m - n) L_{m+n} - m(m^2 - 1)/24 delta_{m+n,0}.
  std::string family;
  int m = 0;
  /// Twice n for the psi family, n for the virasoro family.
  int n_twice_or_n = 0;
  Rational max_deviation = 0;
  /// Basis states on which both sides stayed inside the truncation.
  int states_checked = 0;
};

struct CommutatorReport {
  std::vector<CommutatorEntry> entries;
  Rational max_psi = 0;
  Rational max_virasoro = 0;

  /// One line per entry: family m n numerator denominator states.
  std::string to_text() const;
};

/// Deviations of both commutator families for |m|, |n| <= L - 1/2, over all
/// basis states of level <= L where no term was clipped.
CommutatorReport commutator_tables(const TruncationConfig& cfg);

}  // namespace isingff::voa
