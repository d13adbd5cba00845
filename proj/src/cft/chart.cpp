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

#include "isingff/cft/chart.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isingff::cft {

ConformalChart ConformalChart::identity() { return ConformalChart(); }

ConformalChart ConformalChart::moebius(Complex a, Complex b, Complex c, Complex d) {
  if (a * d - b * c == 0.0) throw std::invalid_argument("moebius: ad - bc = 0");
  ConformalChart chart;
  chart.kind_ = Kind::moebius;
  chart.pieces_.push_back({Kind::moebius, a, b, c, d, 0.0});
  return chart;
}

ConformalChart ConformalChart::horizontal_strip_to_H(double height) {
  if (!(height > 0.0)) throw std::invalid_argument("strip chart: height must be positive");
  ConformalChart chart;
  chart.kind_ = Kind::horizontal_strip_to_H;
  chart.pieces_.push_back({Kind::horizontal_strip_to_H, 0.0, 0.0, 0.0, 0.0, height});
  return chart;
}

ConformalChart ConformalChart::rotation(double angle) {
  ConformalChart chart;
  chart.kind_ = Kind::rotation;
  chart.pieces_.push_back({Kind::rotation, 0.0, 0.0, 0.0, 0.0, angle});
  return chart;
}

ConformalChart ConformalChart::composition(const std::vector<ConformalChart>& pieces) {
  ConformalChart chart;
  chart.kind_ = Kind::composition;
  for (const auto& p : pieces) {
    chart.pieces_.insert(chart.pieces_.end(), p.pieces_.begin(), p.pieces_.end());
  }
  return chart;
}

std::string ConformalChart::kind_name() const {
  switch (kind_) {
    case Kind::identity: return "identity";
    case Kind::moebius: return "moebius";
    case Kind::horizontal_strip_to_H: return "strip";
    case Kind::rotation: return "rotation";
    case Kind::composition: return "composition";
  }
  return "unknown";
}

bool ConformalChart::is_identity() const { return pieces_.empty(); }

Jet ConformalChart::apply(const Piece& p, const Jet& x) const {
  switch (p.kind) {
    case Kind::moebius: {
      const Jet num = p.a * x + p.b;
      const Jet den = p.c * x + p.d;
      return num / den;
    }
    case Kind::horizontal_strip_to_H:
      return exp(Complex(std::numbers::pi / p.param) * x);
    case Kind::rotation:
      return std::polar(1.0, p.param) * x;
    default:
      return x;
  }
}

Jet ConformalChart::jet(Complex z, int order) const {
  Jet x = Jet::variable(z, order);
  for (const auto& p : pieces_) x = apply(p, x);
  return x;
}

ChartDerivatives ConformalChart::derivatives(Complex z) const {
  const Jet j = jet(z, 3);
  return {j[0], j.derivative(1), j.derivative(2), j.derivative(3)};
}

Complex schwarzian(const ConformalChart& chart, Complex z) {
  const auto d = chart.derivatives(z);
  if (d.g1 == 0.0) throw std::domain_error("schwarzian: g'(z) = 0");
  const Complex r = d.g2 / d.g1;
  return d.g3 / d.g1 - 1.5 * r * r;
}

}  // namespace isingff::cft
