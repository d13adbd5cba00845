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

#include "isingff/voa/vertex.hpp"

namespace isingff::voa {

namespace {

// Generalized binomial C(x, k) for integer x and k >= 0.
long long binomial(long long x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= Rational(x - i, i + 1);
  return r.numerator();
}

// (d^k psi / k!)_{(i)} v = C(k - i - 1, k) psi_{i + 1/2 - k} v.
FockVector derivative_psi_mode(int k, int i, const FockVector& v, const TruncationConfig& cfg) {
  const long long c = binomial(k - i - 1, k);
  if (c == 0) return {};
  return Rational(c) * apply_psi_mode(ModeIndex::from_twice(2 * (i - k) + 1), v, cfg);
}

FockVector monomial_vertex(const Monomial& u, std::size_t first, int j, const FockVector& v,
                           const TruncationConfig& cfg) {
  if (first == u.size()) return j == -1 ? v : FockVector{};
  const int k = (u[first] - 1) / 2;
  int twice_wt_b = 0;
  for (std::size_t t = first + 1; t < u.size(); ++t) twice_wt_b += u[t];
  const bool b_odd = (u.size() - first - 1) % 2 == 1;
  const int twice_lv = v.twice_level();

  FockVector out;
  if (v.clipped()) out.mark_clipped();
  // a(z)_+ b(z): i < 0; b_{(j-i-1)} v vanishes once j - i - 1 > wt(b) + level(v) - 1.
  const int i_min = j - (twice_wt_b + twice_lv) / 2 - 1;
  for (int i = -1; i >= i_min; --i) {
    out += derivative_psi_mode(k, i, monomial_vertex(u, first + 1, j - i - 1, v, cfg), cfg);
  }
  // (-1)^{|a||b|} b(z) a(z)_-: i >= k; psi_{i+1/2-k} v vanishes past level(v).
  const int i_max = k + twice_lv / 2;
  for (int i = k; i <= i_max; ++i) {
    auto term = monomial_vertex(u, first + 1, j - i - 1, derivative_psi_mode(k, i, v, cfg), cfg);
    if (b_odd) term *= -1;
    out += term;
  }
  return out;
}

}  // namespace

FockVector vertex_mode(const FockVector& u, int j, const FockVector& v, const TruncationConfig& cfg) {
  TruncationConfig wide = cfg;
  wide.twice_L = cfg.twice_L + u.twice_level();
  wide.strict = false;
  FockVector out;
  if (u.clipped() || v.clipped()) out.mark_clipped();
  for (const auto& [m, c] : u.terms()) out += c * monomial_vertex(m, 0, j, v, wide);
  return truncate(out, cfg);
}

}  // namespace isingff::voa
