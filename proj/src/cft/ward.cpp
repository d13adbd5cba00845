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

#include "isingff/cft/ward.hpp"

#include "isingff/cft/correlators.hpp"

#include <stdexcept>

namespace isingff::cft {

namespace {

std::vector<FieldInsertion> primaries(std::span<const Complex> ws) {
  std::vector<FieldInsertion> out;
  for (auto w : ws) out.push_back({w, 0});
  return out;
}

Complex d_w(const ConformalChart& chart, std::span<const Complex> ws, std::size_t i) {
  auto fields = primaries(ws);
  fields[i].order = 1;
  return fermion_correlator(chart, fields);
}

void check_distinct(Complex z, std::span<const Complex> ws) {
  for (auto w : ws) {
    if (w == z) throw std::invalid_argument("Ward identity: z coincides with an insertion");
  }
}

}  // namespace

WardReport ward_halfplane(Complex z, std::span<const Complex> ws, double eta) {
  check_distinct(z, ws);
  const auto id = ConformalChart::identity();
  const auto fields = primaries(ws);
  WardReport r;
  r.lhs = virasoro_insertion_limit(id, z, fields, eta);
  const Complex t_points[1] = {z};
  r.lhs_direct = virasoro_correlator(id, t_points, fields);
  const Complex f = fermion_correlator(id, fields);
  r.rhs = 0.0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const Complex d = z - ws[i];
    r.rhs += 0.5 / (d * d) * f + d_w(id, ws, i) / d;
  }
  r.rhs_without_shift = r.rhs;
  return r;
}

WardReport ward_domain(const ConformalChart& chart, Complex z, std::span<const Complex> ws,
                       double eta) {
  check_distinct(z, ws);
  const auto gz = chart.derivatives(z);
  const Complex s = schwarzian(chart, z);
  const auto fields = primaries(ws);
  const Complex f = fermion_correlator(chart, fields);

  std::vector<Complex> mapped;
  Complex weight = 1.0;
  for (auto w : ws) {
    const auto gw = chart.derivatives(w);
    mapped.push_back(gw.g);
    weight *= std::sqrt(gw.g1);
  }
  WardReport r;
  r.lhs = gz.g1 * gz.g1 *
              virasoro_insertion_limit(ConformalChart::identity(), gz.g, primaries(mapped), eta) *
              weight +
          s / 24.0 * f;
  r.lhs_direct = virasoro_insertion_limit(chart, z, fields, eta);

  r.rhs = s / 24.0 * f;
  r.rhs_without_shift = r.rhs;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const auto gw = chart.derivatives(ws[i]);
    const Complex d = gz.g - gw.g;
    const Complex pole = gz.g1 * gz.g1 / d;
    const Complex dfi = d_w(chart, ws, i);
    const Complex common = 0.5 * pole / d * f;
    r.rhs += common + pole / gw.g1 * (dfi - 0.5 * gw.g2 / gw.g1 * f);
    r.rhs_without_shift += common + pole / gw.g1 * dfi;
  }
  return r;
}

ExpandedWardTerms ward_domain_expanded(const ConformalChart& chart, Complex z,
                                       std::span<const Complex> ws) {
  check_distinct(z, ws);
  const auto fields = primaries(ws);
  const Complex f = fermion_correlator(chart, fields);
  ExpandedWardTerms out;
  out.total = 0.0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const auto g = chart.derivatives(ws[i]);
    const Complex r2 = g.g2 / g.g1;
    const Complex r3 = g.g3 / g.g1;
    const Complex s = schwarzian(chart, ws[i]);
    const Complex d = z - ws[i];
    const Complex dfi = d_w(chart, ws, i);
    const Complex term = 0.5 / (d * d) * f + (0.5 * r2 * f + dfi) / d +
                         d * (s - r3 / 6.0 + 1.75 * r2 * r2) * dfi + 1.5 * r2 * dfi;
    out.per_point.push_back(term);
    out.total += term;
  }
  out.trailing = 0.0;
  if (!ws.empty()) {
    const auto g = chart.derivatives(ws.front());
    out.trailing = (schwarzian(chart, ws.front()) / 8.0 + 0.25 * g.g3 / g.g1) * f;
  }
  out.total += out.trailing;
  return out;
}

}  // namespace isingff::cft
