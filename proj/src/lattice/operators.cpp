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

#include "isingff/lattice/operators.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace isingff::lattice {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI(0.0, 1.0);

std::uint32_t site_bit(const StripGeometry& geom, int j) {
  return std::uint32_t{1} << static_cast<unsigned>(geom.M - j);
}

std::uint32_t string_left_of(const StripGeometry& geom, int s) {
  std::uint32_t mask = 0;
  for (int j = -geom.M; j < s; ++j) mask |= site_bit(geom, j);
  return mask;
}

void check_site(const StripGeometry& geom, int j) {
  if (j < -geom.M || j > geom.M) throw std::out_of_range("site outside the strip");
}

}  // namespace

RowOperator PauliString::dense(Eigen::Index dimension) const {
  RowOperator out = RowOperator::Zero(dimension, dimension);
  for (Eigen::Index b = 0; b < dimension; ++b) {
    const auto ub = static_cast<std::uint32_t>(b);
    const double sign = (std::popcount(ub & z_mask) % 2 == 0) ? 1.0 : -1.0;
    out(static_cast<Eigen::Index>(ub ^ x_mask), b) = phase * sign;
  }
  return out;
}

Eigen::VectorXcd PauliString::apply(const Eigen::VectorXcd& v) const {
  Eigen::VectorXcd out(v.size());
  for (Eigen::Index b = 0; b < v.size(); ++b) {
    const auto ub = static_cast<std::uint32_t>(b);
    const double sign = (std::popcount(ub & z_mask) % 2 == 0) ? 1.0 : -1.0;
    out(static_cast<Eigen::Index>(ub ^ x_mask)) = phase * sign * v(b);
  }
  return out;
}

PauliString spin_string(const StripGeometry& geom, int j) {
  check_site(geom, j);
  return PauliString{0, site_bit(geom, j), 1.0};
}

PauliString clifford_p_string(const StripGeometry& geom, HalfInteger k) {
  const int s = (k.twice() + 1) / 2;
  check_site(geom, s);
  return PauliString{string_left_of(geom, s), site_bit(geom, s), 1.0};
}

PauliString clifford_q_string(const StripGeometry& geom, HalfInteger k) {
  const int s = (k.twice() - 1) / 2;
  check_site(geom, s);
  // Y = i X Z
  return PauliString{string_left_of(geom, s) | site_bit(geom, s), site_bit(geom, s), kI};
}

std::vector<HalfInteger> p_modes(const StripGeometry& geom) {
  std::vector<HalfInteger> out;
  for (int j = -geom.M; j <= geom.M; ++j) out.push_back(HalfInteger::from_twice(2 * j - 1));
  return out;
}

std::vector<HalfInteger> q_modes(const StripGeometry& geom) {
  std::vector<HalfInteger> out;
  for (int j = -geom.M; j <= geom.M; ++j) out.push_back(HalfInteger::from_twice(2 * j + 1));
  return out;
}

SpinAndClifford build_spin_and_clifford(const StripGeometry& geom) {
  const Eigen::Index dim = geom.dimension();
  SpinAndClifford out;
  for (int j = -geom.M; j <= geom.M; ++j) out.sigma.push_back(spin_string(geom, j).dense(dim));
  out.p_modes = p_modes(geom);
  for (auto k : out.p_modes) out.p.push_back(clifford_p_string(geom, k).dense(dim));
  out.q_modes = q_modes(geom);
  for (auto k : out.q_modes) out.q.push_back(clifford_q_string(geom, k).dense(dim));
  return out;
}

TransferMatrices transfer_matrices(const StripGeometry& geom) {
  const Eigen::Index dim = geom.dimension();
  const double beta = geom.beta;
  TransferMatrices t;

  t.v1_diagonal.resize(dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    double bonds = 0.0;
    for (int j = -geom.M; j < geom.M; ++j) {
      bonds += spin_value(geom, b, j) * spin_value(geom, b, j + 1);
    }
    t.v1_diagonal(b) = std::exp(beta * bonds);
  }
  t.v1 = t.v1_diagonal.asDiagonal();

  std::uint32_t boundary = 0, interior = 0;
  for (int j = -geom.M; j <= geom.M; ++j) {
    (std::abs(j) == geom.M ? boundary : interior) |= site_bit(geom, j);
  }
  const int n_interior = std::popcount(interior);
  t.v2plus = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto diff = static_cast<std::uint32_t>(r ^ c);
      if (diff & boundary) continue;
      const int overlap = n_interior - 2 * std::popcount(diff & interior);
      t.v2plus(r, c) = std::exp(beta * overlap);
    }
  }

  const Eigen::VectorXd half = t.v1_diagonal.cwiseSqrt();
  t.vm = half.asDiagonal() * t.v2plus * half.asDiagonal();
  return t;
}

double induced_rotation_check(const StripGeometry& geom, const RowOperator& v) {
  const Eigen::Index dim = geom.dimension();
  if (v.rows() != dim || v.cols() != dim) {
    throw std::invalid_argument("induced_rotation_check: operator dimension mismatch");
  }
  Eigen::FullPivLU<RowOperator> lu(v);
  if (!lu.isInvertible()) throw std::domain_error("induced_rotation_check: V is singular");
  const RowOperator v_inv = lu.inverse();

  std::vector<RowOperator> gens;
  for (auto k : p_modes(geom)) gens.push_back(clifford_p_string(geom, k).dense(dim));
  for (auto k : q_modes(geom)) gens.push_back(clifford_q_string(geom, k).dense(dim));
  const auto n = static_cast<Eigen::Index>(gens.size());

  // Rotation matrix R with T(V) g_a = sum_b R(a, b) g_b; tr(g_b g_c) = dim * delta_bc.
  Eigen::MatrixXcd rot(n, n);
  double deviation = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    const RowOperator image = v_inv * gens[static_cast<std::size_t>(a)] * v;
    RowOperator rebuilt = RowOperator::Zero(dim, dim);
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto& g = gens[static_cast<std::size_t>(b)];
      rot(a, b) = (g * image).trace() / static_cast<double>(dim);
      rebuilt += rot(a, b) * g;
    }
    const double scale = std::max(1.0, image.cwiseAbs().maxCoeff());
    deviation = std::max(deviation, (image - rebuilt).cwiseAbs().maxCoeff() / scale);
  }
  // (T a, T b) = 2 sum_c R(a, c) R(b, c) must equal (a, b) = 2 delta_ab.
  const Eigen::MatrixXcd form = 2.0 * rot * rot.transpose();
  const Eigen::MatrixXcd expected = 2.0 * Eigen::MatrixXcd::Identity(n, n);
  deviation = std::max(deviation, (form - expected).cwiseAbs().maxCoeff());
  return deviation;
}

double induced_rotation_check(const StripGeometry& geom) {
  const auto t = transfer_matrices(geom);
  return induced_rotation_check(geom, RowOperator(t.vm.cast<Complex>()));
}

double clifford_relation_error(const SpinAndClifford& ops) {
  double worst = 0.0;
  auto check = [&](const RowOperator& a, const RowOperator& b, double expected) {
    const RowOperator ac = a * b + b * a - expected * RowOperator::Identity(a.rows(), a.cols());
    worst = std::max(worst, ac.cwiseAbs().maxCoeff());
  };
  for (std::size_t a = 0; a < ops.p.size(); ++a) {
    for (std::size_t b = 0; b < ops.p.size(); ++b) check(ops.p[a], ops.p[b], a == b ? 2.0 : 0.0);
    for (std::size_t b = 0; b < ops.q.size(); ++b) check(ops.p[a], ops.q[b], 0.0);
  }
  for (std::size_t a = 0; a < ops.q.size(); ++a) {
    for (std::size_t b = 0; b < ops.q.size(); ++b) check(ops.q[a], ops.q[b], a == b ? 2.0 : 0.0);
  }
  return worst;
}

}  // namespace isingff::lattice
