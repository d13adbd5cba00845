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

#include "isingff/cft/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace isingff::cft {

Jet::Jet(int order, Complex constant) : c_(static_cast<std::size_t>(order + 1), 0.0) {
  if (order < 0) throw std::invalid_argument("Jet: negative order");
  c_[0] = constant;
}

Jet Jet::variable(Complex z0, int order) {
  Jet j(order, z0);
  if (order >= 1) j[1] = 1.0;
  return j;
}

Complex Jet::derivative(int k) const {
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return factorial * (*this)[k];
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.order());
  for (int k = 0; k <= a.order(); ++k) {
    for (int j = 0; j <= k; ++j) r[k] += a[j] * b[k - j];
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b[0] == 0.0) throw std::domain_error("Jet: division by a series vanishing at the point");
  Jet q(a.order());
  for (int k = 0; k <= a.order(); ++k) {
    Complex s = a[k];
    for (int j = 0; j < k; ++j) s -= q[j] * b[k - j];
    q[k] = s / b[0];
  }
  return q;
}

Jet operator+(const Jet& a, Complex s) {
  Jet r = a;
  r[0] += s;
  return r;
}

Jet operator*(Complex s, const Jet& a) {
  Jet r = a;
  for (int k = 0; k <= a.order(); ++k) r[k] *= s;
  return r;
}

Jet exp(const Jet& a) {
  Jet e(a.order(), std::exp(a[0]));
  for (int k = 1; k <= a.order(); ++k) {
    Complex s = 0.0;
    for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * e[k - j];
    e[k] = s / static_cast<double>(k);
  }
  return e;
}

Jet sqrt(const Jet& a) {
  if (a[0] == 0.0) throw std::domain_error("Jet: square root at a zero");
  Jet s(a.order(), std::sqrt(a[0]));
  for (int k = 1; k <= a.order(); ++k) {
    Complex t = a[k];
    for (int j = 1; j < k; ++j) t -= s[j] * s[k - j];
    s[k] = t / (2.0 * s[0]);
  }
  return s;
}

BiSeries::BiSeries(int degree)
    : degree_(degree), c_(static_cast<std::size_t>((degree + 1) * (degree + 1)), 0.0) {
  if (degree < 0) throw std::invalid_argument("BiSeries: negative degree");
}

Complex BiSeries::operator()(int i, int j) const {
  if (i < 0 || j < 0 || i + j > degree_) return 0.0;
  return c_[static_cast<std::size_t>(i * (degree_ + 1) + j)];
}

Complex& BiSeries::at(int i, int j) { return c_[static_cast<std::size_t>(i * (degree_ + 1) + j)]; }

BiSeries BiSeries::operator*(const BiSeries& other) const {
  BiSeries r(degree_);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) {
      Complex s = 0.0;
      for (int a = 0; a <= i; ++a) {
        for (int b = 0; b <= j; ++b) s += (*this)(a, b) * other(i - a, j - b);
      }
      r.at(i, j) = s;
    }
  }
  return r;
}

BiSeries BiSeries::reciprocal() const {
  const Complex c0 = (*this)(0, 0);
  if (c0 == 0.0) throw std::domain_error("BiSeries: reciprocal of a series vanishing at 0");
  BiSeries q(degree_);
  for (int t = 0; t <= degree_; ++t) {
    for (int i = 0; i <= t; ++i) {
      const int j = t - i;
      Complex s = (t == 0) ? 1.0 : 0.0;
      for (int a = 0; a <= i; ++a) {
        for (int b = 0; b <= j; ++b) {
          if (a == 0 && b == 0) continue;
          s -= (*this)(a, b) * q(i - a, j - b);
        }
      }
      q.at(i, j) = s / c0;
    }
  }
  return q;
}

BiSeries BiSeries::divide_by_difference() const {
  // P_ij = Q_{i-1,j} - Q_{i,j-1}, solved degree by degree starting from the pure x power.
  if (degree_ == 0) return BiSeries(0);
  BiSeries q(degree_ - 1);
  for (int t = 0; t < degree_; ++t) {
    q.at(t, 0) = (*this)(t + 1, 0);
    for (int i = t - 1; i >= 0; --i) q.at(i, t - i) = (*this)(i + 1, t - i) + q(i + 1, t - i - 1);
  }
  return q;
}

BiSeries BiSeries::from_x(const Jet& f, int degree) {
  BiSeries r(degree);
  for (int i = 0; i <= std::min(degree, f.order()); ++i) r.at(i, 0) = f[i];
  return r;
}

BiSeries BiSeries::from_y(const Jet& f, int degree) {
  BiSeries r(degree);
  for (int j = 0; j <= std::min(degree, f.order()); ++j) r.at(0, j) = f[j];
  return r;
}

}  // namespace isingff::cft
