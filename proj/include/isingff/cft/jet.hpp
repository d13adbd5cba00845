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

#include <complex>
#include <vector>

namespace isingff::cft {

using Complex = std::complex<double>;

/// Truncated Taylor series sum_k c_k x^k, k <= order.
class Jet {
 public:
  explicit Jet(int order, Complex constant = 0.0);
  /// z0 + x.
  static Jet variable(Complex z0, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Complex operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Complex& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  /// k-th derivative at the expansion point, k! c_k.
  Complex derivative(int k) const;

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(const Jet& a, Complex s);
  friend Jet operator*(Complex s, const Jet& a);

 private:
  std::vector<Complex> c_;
};

Jet exp(const Jet& a);
/// Principal branch at the constant term.
Jet sqrt(const Jet& a);

/// Bivariate series sum c_ij x^i y^j truncated at total degree i + j <= degree.
class BiSeries {
 public:
  explicit BiSeries(int degree);

  int degree() const { return degree_; }
  Complex operator()(int i, int j) const;
  Complex& at(int i, int j);

  BiSeries operator*(const BiSeries& other) const;
  /// Reciprocal; requires a nonzero constant term.
  BiSeries reciprocal() const;
  /// Q with P = (x - y) Q. P must vanish on the diagonal; Q is truncated at degree - 1.
  BiSeries divide_by_difference() const;

  static BiSeries from_x(const Jet& f, int degree);
  static BiSeries from_y(const Jet& f, int degree);

 private:
  int degree_;
  std::vector<Complex> c_;
};

}  // namespace isingff::cft
