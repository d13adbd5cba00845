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

#include "isingff/cft/correlators.hpp"

#include "isingff/numerics/finite_difference.hpp"
#include "isingff/numerics/pfaffian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isingff::cft {

namespace {

constexpr Complex kI(0.0, 1.0);

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Taylor jet of g' at z with `order` terms, from the jet of g one order higher.
Jet derivative_jet(const ConformalChart& chart, Complex z, int order) {
  const Jet g = chart.jet(z, order + 1);
  Jet d(order);
  for (int k = 0; k <= order; ++k) d[k] = static_cast<double>(k + 1) * g[k + 1];
  return d;
}

bool contains_pair(std::span<const std::pair<int, int>> pairs, int i, int j) {
  return std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
    return (p.first == i && p.second == j) || (p.first == j && p.second == i);
  });
}

Eigen::MatrixXcd contraction_matrix(const ConformalChart& chart,
                                    std::span<const FieldInsertion> fields,
                                    std::span<const std::pair<int, int>> normal_ordered) {
  const auto n = static_cast<Eigen::Index>(fields.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto& fi = fields[static_cast<std::size_t>(i)];
      const auto& fj = fields[static_cast<std::size_t>(j)];
      if (contains_pair(normal_ordered, static_cast<int>(i), static_cast<int>(j))) {
        if (fi.point != fj.point) {
          throw std::invalid_argument("normal-ordered pair at different points");
        }
        m(i, j) = regular_part(chart, fi.point, fi.order, fj.order);
      } else {
        if (fi.point == fj.point) throw std::invalid_argument("coincident insertion points");
        m(i, j) = kernel_derivative(chart, fi.point, fj.point, fi.order, fj.order);
      }
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

/// d_w two_point(z, w) at w = z + e, from the Taylor jet at z so that
/// g(w) - g(z) carries no cancellation error for small e.
// d_w <psi(z) psi(w)> - 1/(z - w)^2 at w = z + e. Everything is expanded in e
// around z so the double pole cancels coefficientwise, not in floating point.
Complex near_pair_regular(const ConformalChart& chart, Complex z, Complex e) {
  if (chart.is_identity()) return 0.0;
  constexpr int kOrder = 14;
  const Jet g = chart.jet(z, kOrder);
  const int n = kOrder - 2;
  Jet q(n), g1w(n), eg2w(n), ev(n);
  for (int k = 0; k <= n; ++k) {
    q[k] = g[k + 1];
    g1w[k] = static_cast<double>(k + 1) * g[k + 1];
    if (k >= 1) eg2w[k] = static_cast<double>((k + 1) * k) * g[k + 1];
  }
  ev[1] = 1.0;
  const Jet sw = sqrt(g1w);
  const Complex sz = std::sqrt(g[1]);
  // e^2 d_w [sz sw / (g(z) - g(w))] with g(z) - g(w) = -e q(e).
  const Jet f = sz * ((-0.5 * eg2w / sw) / q + sw * g1w / (q * q));
  Complex total = 0.0;
  for (int k = n; k >= 2; --k) total = total * e + f[k];
  return total;
}

Complex pairing_sum(const ConformalChart& chart, std::span<const Complex> points,
                    std::vector<int>& rest) {
  if (rest.empty()) return 1.0;
  const int first = rest.front();
  Complex total = 0.0;
  for (std::size_t j = 1; j < rest.size(); ++j) {
    std::vector<int> remaining;
    for (std::size_t t = 1; t < rest.size(); ++t) {
      if (t != j) remaining.push_back(rest[t]);
    }
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    total += sign *
             two_point(chart, points[static_cast<std::size_t>(first)],
                       points[static_cast<std::size_t>(rest[j])]) *
             pairing_sum(chart, points, remaining);
  }
  return total;
}

}  // namespace

Complex f_up_halfplane(Complex z, Complex zp) {
  if (z == zp) throw std::invalid_argument("f_up: coincident points");
  return kI / (2.0 * std::numbers::pi) * (1.0 / (z - zp) + 1.0 / (z - std::conj(zp)));
}

Complex f_down_halfplane(Complex z, Complex zp) {
  if (z == zp) throw std::invalid_argument("f_down: coincident points");
  return kI / (2.0 * std::numbers::pi) * (-1.0 / (z - zp) + 1.0 / (z - std::conj(zp)));
}

Complex two_point(const ConformalChart& chart, Complex z, Complex w) {
  if (z == w) throw std::invalid_argument("two_point: coincident points");
  if (chart.is_identity()) return 1.0 / (z - w);
  const Jet jz = chart.jet(z, 1);
  const Jet jw = chart.jet(w, 1);
  return std::sqrt(jz[1]) * std::sqrt(jw[1]) / (jz[0] - jw[0]);
}

Complex kernel_derivative(const ConformalChart& chart, Complex z, Complex w, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("kernel_derivative: negative order");
  if (z == w) throw std::invalid_argument("kernel_derivative: coincident points");
  if (chart.is_identity()) {
    const double sign = (a % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial(a + b) / std::pow(z - w, a + b + 1);
  }
  const int degree = a + b;
  const Jet gz = chart.jet(z, degree);
  const Jet gw = chart.jet(w, degree);
  const Jet sz = sqrt(derivative_jet(chart, z, degree));
  const Jet sw = sqrt(derivative_jet(chart, w, degree));

  BiSeries diff(degree);
  diff.at(0, 0) = gz[0] - gw[0];
  for (int k = 1; k <= degree; ++k) {
    diff.at(k, 0) = gz[k];
    diff.at(0, k) = -gw[k];
  }
  const BiSeries k_series =
      BiSeries::from_x(sz, degree) * BiSeries::from_y(sw, degree) * diff.reciprocal();
  return k_series(a, b) * factorial(a) * factorial(b);
}

Complex regular_part(const ConformalChart& chart, Complex z, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("regular_part: negative order");
  if (chart.is_identity()) return 0.0;
  const int degree = a + b;
  const Jet g = chart.jet(z, degree + 2);
  const Jet s = sqrt(derivative_jet(chart, z, degree + 1));

  // g(z + x) - g(z + y) = (x - y) Q(x, y).
  BiSeries q(degree + 1);
  for (int k = 1; k <= degree + 2; ++k) {
    for (int i = 0; i < k; ++i) q.at(i, k - 1 - i) = g[k];
  }
  BiSeries p = BiSeries::from_x(s, degree + 1) * BiSeries::from_y(s, degree + 1);
  for (int i = 0; i <= degree + 1; ++i) {
    for (int j = 0; i + j <= degree + 1; ++j) p.at(i, j) -= q(i, j);
  }
  // K - 1/(x - y) = P / ((x - y) Q).
  BiSeries q_low(degree);
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; i + j <= degree; ++j) q_low.at(i, j) = q(i, j);
  }
  const BiSeries r = p.divide_by_difference() * q_low.reciprocal();
  return r(a, b) * factorial(a) * factorial(b);
}

Complex npoint(const ConformalChart& chart, std::span<const Complex> points) {
  std::vector<FieldInsertion> fields;
  for (auto p : points) fields.push_back({p, 0});
  return fermion_correlator(chart, fields);
}

Complex wick_pairing_oracle(const ConformalChart& chart, std::span<const Complex> points) {
  if (points.size() > 10) throw std::invalid_argument("wick_pairing_oracle: more than 10 points");
  if (points.size() % 2 == 1) return 0.0;
  std::vector<int> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return pairing_sum(chart, points, all);
}

Complex fermion_correlator(const ConformalChart& chart, std::span<const FieldInsertion> fields,
                           std::span<const std::pair<int, int>> normal_ordered) {
  if (fields.size() % 2 == 1) return 0.0;
  return pfaffian(SkewMatrix<Complex>(contraction_matrix(chart, fields, normal_ordered)));
}

void CorrelatorRequest::validate() const {
  if (points.size() != derivative_orders.size()) {
    throw std::invalid_argument("CorrelatorRequest: one derivative order per point");
  }
  for (int a : derivative_orders) {
    if (a < 0 || a > 3) throw std::invalid_argument("CorrelatorRequest: orders must be in [0, 3]");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw std::invalid_argument("CorrelatorRequest: coincident points");
    }
  }
}

namespace {

Complex nested_difference(const CorrelatorRequest& r, std::vector<Complex> points,
                          std::size_t index) {
  if (index == points.size()) return npoint(r.chart, points);
  const int order = r.derivative_orders[index];
  if (order == 0) return nested_difference(r, std::move(points), index + 1);
  const double h = 1e-3 * std::max(1.0, std::abs(points[index]));
  const ComplexFunction f = [&, points](Complex z) {
    auto moved = points;
    moved[index] = z;
    return nested_difference(r, std::move(moved), index + 1);
  };
  if (order <= 2) return central_diff(f, points[index], order, h);
  const ComplexFunction second = [&](Complex z) { return central_diff(f, z, 2, h); };
  return central_diff(second, points[index], 1, h);
}

}  // namespace

Complex derivative_correlator(const CorrelatorRequest& request) {
  request.validate();
  return nested_difference(request, request.points, 0);
}

Complex derivative_correlator_exact(const CorrelatorRequest& request) {
  request.validate();
  std::vector<FieldInsertion> fields;
  for (std::size_t i = 0; i < request.points.size(); ++i) {
    fields.push_back({request.points[i], request.derivative_orders[i]});
  }
  return fermion_correlator(request.chart, fields);
}

Complex virasoro_correlator(const ConformalChart& chart, std::span<const Complex> t_points,
                            std::span<const FieldInsertion> fields) {
  std::vector<FieldInsertion> all;
  std::vector<std::pair<int, int>> pairs;
  for (auto t : t_points) {
    pairs.emplace_back(static_cast<int>(all.size()), static_cast<int>(all.size()) + 1);
    all.push_back({t, 0});
    all.push_back({t, 1});
  }
  all.insert(all.end(), fields.begin(), fields.end());
  return std::pow(-0.5, static_cast<int>(t_points.size())) *
         fermion_correlator(chart, all, pairs);
}

Complex virasoro_insertion_limit(const ConformalChart& chart, Complex z,
                                 std::span<const FieldInsertion> fields, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("virasoro_insertion_limit: eta must be positive");
  auto at = [&](double e) {
    std::vector<FieldInsertion> all = {{z, 0}, {z + e, 1}};
    all.insert(all.end(), fields.begin(), fields.end());
    Eigen::MatrixXcd m = contraction_matrix(chart, all, {});
    // Pf is linear in the (0, 1) entry, whose coefficient is <X>: subtracting
    // d_w 1/(z - w) there subtracts <X>/(z - w)^2 from the correlator.
    m(0, 1) = near_pair_regular(chart, z, e);
    m(1, 0) = -m(0, 1);
    return -0.5 * pfaffian(SkewMatrix<Complex>(m));
  };
  // The subtracted value is T + c1 eta + c2 eta^2 + ...; two Richardson levels.
  const Complex coarse = 2.0 * at(0.5 * eta) - at(eta);
  const Complex fine = 2.0 * at(0.25 * eta) - at(0.5 * eta);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace isingff::cft
