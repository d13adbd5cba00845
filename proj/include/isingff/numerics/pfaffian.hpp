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

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace isingff {

namespace detail {

template <class Scalar>
double magnitude(const Scalar& x) {
  using std::abs;
  return static_cast<double>(abs(x));
}

}  // namespace detail

/// Dense skew-symmetric matrix. Construction checks A^T = -A entrywise.
template <class Scalar>
class SkewMatrix {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  SkewMatrix() = default;

  explicit SkewMatrix(Matrix m, double tolerance = 1e-12) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
      throw std::invalid_argument("SkewMatrix: matrix is not square");
    }
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
      for (Eigen::Index j = i; j < m_.cols(); ++j) {
        if (detail::magnitude(Scalar(m_(i, j) + m_(j, i))) > tolerance) {
          throw std::invalid_argument("SkewMatrix: A + A^T is not zero");
        }
      }
    }
  }

  /// Builds the matrix from its strict upper triangle, entry(i, j) for i < j.
  template <class F>
  static SkewMatrix from_upper(Eigen::Index n, F&& entry) {
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        m(i, j) = entry(i, j);
        m(j, i) = -m(i, j);
      }
    }
    return SkewMatrix(std::move(m));
  }

  const Matrix& matrix() const { return m_; }
  Eigen::Index size() const { return m_.rows(); }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

 private:
  Matrix m_;
};

/// Pfaffian by Parlett-Reid tridiagonalization with partial pivoting.
/// Odd dimension gives 0, dimension 0 gives 1.
template <class Scalar>
Scalar pfaffian(const SkewMatrix<Scalar>& skew) {
  using Matrix = typename SkewMatrix<Scalar>::Matrix;
  const Eigen::Index n = skew.size();
  if (n == 0) return Scalar(1);
  if (n % 2 == 1) return Scalar(0);

  Matrix a = skew.matrix();
  Scalar pf(1);
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index pivot = k + 1;
    double best = detail::magnitude(a(k + 1, k));
    for (Eigen::Index i = k + 2; i < n; ++i) {
      const double v = detail::magnitude(a(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (pivot != k + 1) {
      a.row(k + 1).swap(a.row(pivot));
      a.col(k + 1).swap(a.col(pivot));
      pf = -pf;
    }
    if (best == 0.0) return Scalar(0);

    pf *= a(k, k + 1);
    const Eigen::Index rest = n - k - 2;
    if (rest > 0) {
      const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> tau =
          a.row(k).tail(rest).transpose() / a(k, k + 1);
      const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> col = a.col(k + 1).tail(rest);
      a.bottomRightCorner(rest, rest) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

template <class Derived>
typename Derived::Scalar pfaffian(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return pfaffian(SkewMatrix<Scalar>(m.eval(), 1e-10 * (1.0 + m.cwiseAbs().maxCoeff())));
}

namespace detail {

template <class Scalar>
Scalar pfaffian_matchings(const typename SkewMatrix<Scalar>::Matrix& a,
                          std::vector<Eigen::Index>& rest) {
  if (rest.empty()) return Scalar(1);
  const Eigen::Index first = rest.front();
  Scalar total(0);
  for (std::size_t j = 1; j < rest.size(); ++j) {
    const Eigen::Index partner = rest[j];
    std::vector<Eigen::Index> remaining;
    remaining.reserve(rest.size() - 2);
    for (std::size_t t = 1; t < rest.size(); ++t) {
      if (t != j) remaining.push_back(rest[t]);
    }
    const Scalar sign = (j % 2 == 1) ? Scalar(1) : Scalar(-1);
    total += sign * a(first, partner) * pfaffian_matchings<Scalar>(a, remaining);
  }
  return total;
}

}  // namespace detail

/// Signed sum over perfect matchings. Reference implementation, n <= 12.
template <class Scalar>
Scalar pfaffian_oracle(const SkewMatrix<Scalar>& skew) {
  const Eigen::Index n = skew.size();
  if (n > 12) throw std::invalid_argument("pfaffian_oracle: dimension above 12");
  if (n % 2 == 1) return Scalar(0);
  std::vector<Eigen::Index> all(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return detail::pfaffian_matchings<Scalar>(skew.matrix(), all);
}

}  // namespace isingff
