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

#include "isingff/voa/chi.hpp"

#include "isingff/cft/correlators.hpp"
#include "isingff/cft/descendants.hpp"
#include "isingff/voa/modes.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace isingff::voa {

namespace {

using Complex = std::complex<double>;

void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    current.push_back(k);
    partitions(n - k, k, current, out);
    current.pop_back();
  }
}

// Any solution of sum_j x_j columns[j] = target, or nothing if inconsistent.
std::optional<std::vector<Rational>> solve(const std::vector<FockVector>& columns,
                                           const FockVector& target) {
  std::map<Monomial, int> row_of;
  for (const auto& col : columns) {
    for (const auto& [m, c] : col.terms()) row_of.try_emplace(m, 0);
  }
  for (const auto& [m, c] : target.terms()) row_of.try_emplace(m, 0);
  int r = 0;
  for (auto& [m, index] : row_of) index = r++;
  const std::size_t rows = row_of.size(), cols = columns.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [m, c] : columns[j].terms()) a[static_cast<std::size_t>(row_of[m])][j] = c;
  }
  for (const auto& [m, c] : target.terms()) a[static_cast<std::size_t>(row_of[m])][cols] = c;

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t j = 0; j < cols && row < rows; ++j) {
    std::size_t p = row;
    while (p < rows && a[p][j].numerator() == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][j];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][j].numerator() == 0) continue;
      const Rational f = a[i][j];
      for (std::size_t t = j; t <= cols; ++t) a[i][t] -= f * a[row][t];
    }
    pivot_col.push_back(j);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i) {
    if (a[i][cols].numerator() != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][cols];
  return x;
}

bool is_multiple_of_psi(const FockVector& v) {
  return v.terms().size() == 1 && v.terms().begin()->first == Monomial{1};
}

Complex wick_route(std::span<const FockVector> states, std::span<const Complex> points,
                   const cft::ConformalChart& chart) {
  // Expand the tensor product slot by slot.
  struct Partial {
    std::vector<cft::FieldInsertion> fields;
    std::vector<std::pair<int, int>> pairs;
    double weight = 1.0;
  };
  std::vector<Partial> partials(1);
  for (std::size_t s = 0; s < states.size(); ++s) {
    std::vector<Partial> next;
    for (const auto& p : partials) {
      for (const auto& [m, c] : states[s].terms()) {
        Partial q = p;
        q.weight *= boost::rational_cast<double>(c);
        const int start = static_cast<int>(q.fields.size());
        for (int a : m) {
          const int k = (a - 1) / 2;
          q.fields.push_back({points[s], k});
          for (int f = 2; f <= k; ++f) q.weight /= f;
        }
        const int end = static_cast<int>(q.fields.size());
        for (int x = start; x < end; ++x) {
          for (int y = x + 1; y < end; ++y) q.pairs.emplace_back(x, y);
        }
        next.push_back(std::move(q));
      }
    }
    partials = std::move(next);
  }
  Complex total = 0.0;
  for (const auto& p : partials) total += p.weight * cft::fermion_correlator(chart, p.fields, p.pairs);
  return total;
}

}  // namespace

VirasoroDecomposition virasoro_decomposition(const FockVector& state) {
  const int parity = state.parity();
  if (state.is_zero()) return {};
  if (parity == 0) throw std::invalid_argument("virasoro_decomposition: mixed fermion parity");
  VirasoroDecomposition out;
  out.odd = parity == -1;
  const FockVector base = out.odd ? FockVector::monomial({1}) : FockVector::vacuum();
  const int base_twice = out.odd ? 1 : 0;

  std::map<int, FockVector> by_level;
  for (const auto& [m, c] : state.terms()) by_level[twice_level(m)].add(m, c);
  for (const auto& [twice, part] : by_level) {
    const int n = (twice - base_twice) / 2;
    std::vector<std::vector<int>> strings;
    std::vector<int> current;
    partitions(n, n, current, strings);
    TruncationConfig cfg;
    cfg.twice_L = twice;
    std::vector<FockVector> columns;
    for (const auto& ks : strings) columns.push_back(apply_virasoro_string(ks, base, cfg));
    const auto x = solve(columns, part);
    if (!x) throw std::invalid_argument("virasoro_decomposition: state outside the Virasoro span");
    for (std::size_t j = 0; j < strings.size(); ++j) {
      if ((*x)[j].numerator() != 0) out.strings.emplace_back(strings[j], (*x)[j]);
    }
  }
  return out;
}

ChiResult chi_correlator(std::span<const FockVector> states, std::span<const Complex> points,
                         const cft::ConformalChart& chart, ChiRoute route) {
  if (states.size() != points.size()) {
    throw std::invalid_argument("chi_correlator: one point per state");
  }
  int odd = 0;
  std::vector<VirasoroDecomposition> decompositions;
  for (const auto& s : states) {
    decompositions.push_back(virasoro_decomposition(s));
    if (!s.is_zero() && decompositions.back().odd) ++odd;
  }
  ChiResult result;
  if (odd % 2 == 1) {
    result.odd_parity = true;
    result.value = 0.0;
    return result;
  }

  std::vector<std::size_t> descendants;
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (!is_multiple_of_psi(states[s])) descendants.push_back(s);
  }
  const bool virasoro_applies = chart.is_identity() && descendants.size() == 1 &&
                                decompositions[descendants[0]].odd;
  if (route == ChiRoute::virasoro && !virasoro_applies) {
    throw std::invalid_argument("chi_correlator: virasoro route needs the identity chart and one odd descendant slot");
  }
  if (route == ChiRoute::wick || !virasoro_applies) {
    result.route = ChiRoute::wick;
    result.value = wick_route(states, points, chart);
    return result;
  }

  result.route = ChiRoute::virasoro;
  const std::size_t d = descendants[0];
  std::vector<Complex> ws;
  double spectator_weight = 1.0;
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (s == d) continue;
    ws.push_back(points[s]);
    spectator_weight *= boost::rational_cast<double>(states[s].terms().begin()->second);
  }
  // Moving the descendant (odd) past d odd slots.
  const double sign = d % 2 == 0 ? 1.0 : -1.0;
  Complex total = 0.0;
  for (const auto& [ks, c] : decompositions[d].strings) {
    total += boost::rational_cast<double>(c) * cft::descendant_correlator(ks, points[d], ws);
  }
  result.value = sign * spectator_weight * total;
  return result;
}

}  // namespace isingff::voa
