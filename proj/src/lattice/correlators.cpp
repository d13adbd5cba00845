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

#include "isingff/lattice/correlators.hpp"

#include "isingff/lattice/operators.hpp"
#include "isingff/numerics/pfaffian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isingff::lattice {

namespace {

using Complex = std::complex<double>;

}  // namespace

LatticeFermionState::LatticeFermionState(const StripGeometry& geom) : geom_(geom) {
  if (!(geom.beta > 0.0)) throw std::invalid_argument("lattice fermions need beta > 0");
  if (geom.M < 1) throw std::invalid_argument("lattice fermions need M >= 1");
  const auto t = transfer_matrices(geom);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t.vm);
  basis_ = solver.eigenvectors();
  const double top = solver.eigenvalues().maxCoeff();
  scaled_eigenvalues_ = solver.eigenvalues() / top;

  Eigen::VectorXcd start = Eigen::VectorXcd::Zero(geom.dimension());
  start(0) = std::sqrt(t.v1_diagonal(0));
  start_ = start;
  norm_ = (start_.transpose() * power(start_, 2 * geom.N))(0).real();
}

Eigen::VectorXcd LatticeFermionState::power(const Eigen::VectorXcd& x, int exponent) const {
  if (exponent == 0) return x;
  Eigen::VectorXcd c = basis_.transpose() * x;
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) *= std::pow(scaled_eigenvalues_(i), exponent);
  return basis_ * c;
}

Eigen::VectorXcd LatticeFermionState::apply_field(const LatticeInsertion& f,
                                                  const Eigen::VectorXcd& x) const {
  if (std::abs(f.k.twice()) > 2 * geom_.M - 1) throw std::out_of_range("fermion column outside strip");
  const Eigen::VectorXcd qx = clifford_q_string(geom_, f.k).apply(x);
  const Eigen::VectorXcd px = clifford_p_string(geom_, f.k).apply(x);
  if (f.kind == FermionKind::psi) return FermionNormalization::a_psi() * (qx + px);
  return FermionNormalization::a_psibar() * (px - qx);
}

Complex LatticeFermionState::correlator(std::span<const LatticeInsertion> fields) const {
  if (fields.size() % 2 == 1) throw std::invalid_argument("odd number of lattice fermions");
  for (const auto& f : fields) {
    if (std::abs(f.m) >= geom_.N) throw std::out_of_range("fermion row must satisfy |m| < N");
  }
  if (fields.empty()) return 1.0;
  // Time ordering: later rows to the left, with the fermionic sign. Fields in
  // one row keep their written order.
  std::vector<LatticeInsertion> ordered(fields.begin(), fields.end());
  int inversions = 0;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i + 1; j < ordered.size(); ++j) inversions += ordered[i].m < ordered[j].m;
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const LatticeInsertion& a, const LatticeInsertion& b) { return a.m > b.m; });
  const double sign = inversions % 2 == 0 ? 1.0 : -1.0;
  // v^T V^{N - m_1} psi_1 V^{m_1 - m_2} psi_2 ... psi_n V^{N + m_n} v, right to left.
  Eigen::VectorXcd x = power(start_, geom_.N + ordered.back().m);
  for (std::size_t i = ordered.size(); i-- > 0;) {
    x = apply_field(ordered[i], x);
    const int next = i > 0 ? ordered[i - 1].m - ordered[i].m : geom_.N - ordered[i].m;
    x = power(x, next);
  }
  return sign * (start_.transpose() * x)(0) / norm_;
}

Complex LatticeFermionState::pfaffian_correlator(std::span<const LatticeInsertion> fields) const {
  const auto n = static_cast<Eigen::Index>(fields.size());
  auto skew = SkewMatrix<Complex>::from_upper(n, [&](Eigen::Index i, Eigen::Index j) {
    const LatticeInsertion pair[2] = {fields[static_cast<std::size_t>(i)],
                                      fields[static_cast<std::size_t>(j)]};
    return correlator(pair);
  });
  return pfaffian(skew);
}

Complex lattice_fermion_correlator(const StripGeometry& geom,
                                   std::span<const LatticeInsertion> fields) {
  return LatticeFermionState(geom).correlator(fields);
}

Parafermion parafermion_from_values(Complex psi_psi, Complex psi_psibar) {
  const Complex a = FermionNormalization::a_psi();
  const double z = FermionNormalization::z_constant;
  const Complex c1 = 2.0 * a * a * z;
  const Complex c2 = 2.0 * Complex(0.0, 1.0) * a * std::conj(a) * z;
  const Complex diff = psi_psi / c1;
  const Complex sum = psi_psibar / c2;
  return {0.5 * (sum + diff), 0.5 * (sum - diff)};
}

std::pair<Complex, Complex> correlators_from_parafermion(const Parafermion& f) {
  const Complex a = FermionNormalization::a_psi();
  const double z = FermionNormalization::z_constant;
  return {2.0 * a * a * z * (f.up - f.down),
          2.0 * Complex(0.0, 1.0) * a * std::conj(a) * z * (f.up + f.down)};
}

Parafermion parafermion_from_correlators(const LatticeFermionState& state, HalfInteger k, int m,
                                         HalfInteger kp, int mp) {
  if (k == kp && m == mp) throw std::invalid_argument("parafermion: z and z' coincide");
  const LatticeInsertion psi_psi[2] = {{kp, mp, FermionKind::psi}, {k, m, FermionKind::psi}};
  const LatticeInsertion psi_psibar[2] = {{kp, mp, FermionKind::psibar}, {k, m, FermionKind::psi}};
  return parafermion_from_values(state.correlator(psi_psi), state.correlator(psi_psibar));
}

}  // namespace isingff::lattice
