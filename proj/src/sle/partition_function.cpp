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

#include "isingff/sle/partition_function.hpp"

#include "isingff/numerics/finite_difference.hpp"
#include "isingff/numerics/pfaffian.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace isingff::sle {

namespace {

using Complex = std::complex<double>;

void check_ordered(std::span<const double> xs) {
  if (xs.size() % 2 == 1 || xs.empty()) throw std::invalid_argument("sle: need 2n points");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i - 1] < xs[i])) throw std::invalid_argument("sle: points must be strictly increasing");
  }
}

Eigen::MatrixXd kernel_matrix(std::span<const double> xs) {
  const auto n = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j) a(i, j) = 1.0 / (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)]);
    }
  }
  return a;
}

}  // namespace

double central_charge(double kappa) { return (3.0 * kappa - 8.0) * (6.0 - kappa) / (2.0 * kappa); }
double boundary_weight(double kappa) { return (6.0 - kappa) / (2.0 * kappa); }

double partition_function(std::span<const double> xs) {
  check_ordered(xs);
  return pfaffian(SkewMatrix<double>(kernel_matrix(xs)));
}

Complex partition_function(std::span<const Complex> xs) {
  const auto n = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const Complex d = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
      if (d == 0.0) throw std::invalid_argument("sle: coincident points");
      a(i, j) = 1.0 / d;
    }
  }
  return pfaffian(SkewMatrix<Complex>(a));
}

std::vector<double> log_gradient(std::span<const double> xs) {
  check_ordered(xs);
  if (xs.size() == 2) {
    const double d = xs[0] - xs[1];
    return {-1.0 / d, 1.0 / d};
  }
  const Eigen::MatrixXd a = kernel_matrix(xs);
  const Eigen::MatrixXd inv = a.inverse();
  const auto n = static_cast<Eigen::Index>(xs.size());
  std::vector<double> grad(xs.size(), 0.0);
  for (Eigen::Index k = 0; k < n; ++k) {
    // dA/dx_k is -a_kj^2 in row k and +a_ik^2 in column k.
    double tr = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == k) continue;
      const double d = a(k, j) * a(k, j);
      tr += inv(j, k) * (-d) + inv(k, j) * d;
    }
    grad[static_cast<std::size_t>(k)] = 0.5 * tr;
  }
  return grad;
}

std::vector<PdeResidual> pde_residuals(std::span<const double> xs) {
  check_ordered(xs);
  const std::size_t n = xs.size();
  std::vector<Complex> base(xs.begin(), xs.end());
  const Complex z = partition_function(std::span<const Complex>(base));
  auto d = [&](std::size_t i, int order) {
    return central_diff(
        [&, i](Complex x) {
          auto p = base;
          p[i] = x;
          return partition_function(std::span<const Complex>(p));
        },
        base[i], order);
  };
  std::vector<Complex> d1(n);
  for (std::size_t i = 0; i < n; ++i) d1[i] = d(i, 1);

  std::vector<PdeResidual> out;
  PdeResidual translation{"translation"}, scaling{"scaling"}, special{"special_conformal"};
  Complex t = 0.0, s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    t += d1[i];
    translation.scale += std::abs(d1[i]);
    s += xs[i] * d1[i] + 0.5 * z;
    scaling.scale += std::abs(xs[i] * d1[i]) + 0.5 * std::abs(z);
    c += xs[i] * xs[i] * d1[i] + xs[i] * z;
    special.scale += std::abs(xs[i] * xs[i] * d1[i]) + std::abs(xs[i] * z);
  }
  translation.residual = std::abs(t);
  scaling.residual = std::abs(s);
  special.residual = std::abs(c);
  out.push_back(translation);
  out.push_back(scaling);
  out.push_back(special);

  for (std::size_t i = 0; i < n; ++i) {
    PdeResidual r{"null_field_" + std::to_string(i)};
    const Complex second = 0.75 * d(i, 2);
    Complex total = second;
    r.scale = std::abs(second);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double gap = xs[j] - xs[i];
      const Complex first = d1[j] / gap;
      const Complex zero = -0.5 * z / (gap * gap);
      total += first + zero;
      r.scale += std::abs(first) + std::abs(zero);
    }
    r.residual = std::abs(total);
    out.push_back(r);
  }
  return out;
}

}  // namespace isingff::sle
