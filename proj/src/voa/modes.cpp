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

#include "isingff/voa/modes.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace isingff::voa {

namespace {

ModeIndex mode(int twice) { return ModeIndex::from_twice(twice); }

}  // namespace

FockVector apply_virasoro_mode(int m, const FockVector& v, const TruncationConfig& cfg) {
  FockVector out;
  if (v.clipped()) out.mark_clipped();
  // Only k with |k| <= level + |m| + 1/2 can act nontrivially.
  int bound = v.twice_level() + 2 * std::abs(m) + 1;
  if (bound % 2 == 0) ++bound;
  for (int tk = -bound; tk <= bound; tk += 2) {
    const int ta = 2 * m + tk;  // psi_{m+k}
    const int tb = -tk;         // psi_{-k}
    const Rational c(-(tk + 2 * m), 4);
    FockVector term;
    if (ta > 0 && tb < 0) {
      term = apply_psi_mode(mode(tb), apply_psi_mode(mode(ta), v, cfg), cfg);
      term *= -c;
    } else {
      term = apply_psi_mode(mode(ta), apply_psi_mode(mode(tb), v, cfg), cfg);
      term *= c;
    }
    out += term;
  }
  if (m == 0 && cfg.a0.numerator() != 0) out += cfg.a0 * v;
  return out;
}

FockVector apply_virasoro_string(std::span<const int> ks, const FockVector& v,
                                 const TruncationConfig& cfg) {
  FockVector out = v;
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) out = apply_virasoro_mode(-*it, out, cfg);
  return out;
}

FockVector singular_vector(int sign, const TruncationConfig& cfg) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("singular_vector: sign must be +-1");
  if (cfg.twice_L < 5) throw std::invalid_argument("singular_vector: need L >= 5/2");
  const auto psi = FockVector::monomial({1});
  const int two[1] = {2};
  const int one_one[2] = {1, 1};
  return apply_virasoro_string(two, psi, cfg) +
         Rational(3 * sign, 4) * apply_virasoro_string(one_one, psi, cfg);
}

std::string CommutatorReport::to_text() const {
  std::ostringstream out;
  out << "family m n max_deviation_numerator max_deviation_denominator states\n";
  for (const auto& e : entries) {
    out << e.family << ' ' << e.m << ' ';
    if (e.family == "psi") {
      out << e.n_twice_or_n << "/2";
    } else {
      out << e.n_twice_or_n;
    }
    out << ' ' << e.max_deviation.numerator() << ' ' << e.max_deviation.denominator() << ' '
        << e.states_checked << '\n';
  }
  return out.str();
}

CommutatorReport commutator_tables(const TruncationConfig& cfg) {
  CommutatorReport report;
  const auto basis = basis_states(cfg.twice_L);
  const int mmax = (cfg.twice_L - 1) / 2;
  for (int m = -mmax; m <= mmax; ++m) {
    for (int tn = -(cfg.twice_L - 1); tn <= cfg.twice_L - 1; tn += 2) {
      CommutatorEntry e{"psi", m, tn};
      for (const auto& b : basis) {
        const auto v = FockVector::monomial(b);
        const auto lhs =
            apply_virasoro_mode(m, apply_psi_mode(mode(tn), v, cfg), cfg) -
            apply_psi_mode(mode(tn), apply_virasoro_mode(m, v, cfg), cfg);
        const auto rhs = Rational(-(m + tn), 2) * apply_psi_mode(mode(2 * m + tn), v, cfg);
        const auto dev = lhs - rhs;
        if (dev.clipped()) continue;
        ++e.states_checked;
        e.max_deviation = std::max(e.max_deviation, dev.max_abs());
      }
      report.max_psi = std::max(report.max_psi, e.max_deviation);
      report.entries.push_back(e);
    }
  }
  for (int m = -mmax; m <= mmax; ++m) {
    for (int n = -mmax; n <= mmax; ++n) {
      CommutatorEntry e{"virasoro", m, n};
      for (const auto& b : basis) {
        const auto v = FockVector::monomial(b);
        auto dev = apply_virasoro_mode(m, apply_virasoro_mode(n, v, cfg), cfg) -
                   apply_virasoro_mode(n, apply_virasoro_mode(m, v, cfg), cfg) -
                   Rational(m - n) * apply_virasoro_mode(m + n, v, cfg);
        if (m + n == 0) dev -= Rational(m * (m * m - 1), 24) * v;
        if (dev.clipped()) continue;
        ++e.states_checked;
        e.max_deviation = std::max(e.max_deviation, dev.max_abs());
      }
      report.max_virasoro = std::max(report.max_virasoro, e.max_deviation);
      report.entries.push_back(e);
    }
  }
  return report;
}

}  // namespace isingff::voa
