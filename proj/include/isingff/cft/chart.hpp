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

#include "isingff/cft/jet.hpp"

#include <string>
#include <vector>

namespace isingff::cft {

struct ChartDerivatives {
  Complex g;
  Complex g1;
  Complex g2;
  Complex g3;
};

/// Conformal map g: D -> H built from elementary pieces. A composition applies
/// its pieces first to last.
class ConformalChart {
 public:
  enum class Kind { identity, moebius, horizontal_strip_to_H, rotation, composition };

  static ConformalChart identity();
  /// (a z + b) / (c z + d), ad - bc != 0.
  static ConformalChart moebius(Complex a, Complex b, Complex c, Complex d);
  /// exp(pi z / height): the strip 0 < Im z < height onto H.
  static ConformalChart horizontal_strip_to_H(double height);
  static ConformalChart rotation(double angle);
  static ConformalChart composition(const std::vector<ConformalChart>& pieces);

  Kind kind() const { return kind_; }
  std::string kind_name() const;
  bool is_identity() const;

  /// Taylor jet of g at z up to `order`.
  Jet jet(Complex z, int order) const;
  ChartDerivatives derivatives(Complex z) const;
  Complex operator()(Complex z) const { return jet(z, 0)[0]; }

 private:
  struct Piece {
    Kind kind;
    Complex a, b, c, d;
    double param;
  };
  Jet apply(const Piece& piece, const Jet& x) const;

  Kind kind_ = Kind::identity;
  std::vector<Piece> pieces_;
};

/// g'''/g' - (3/2)(g''/g')^2. Throws std::domain_error if g'(z) = 0.
Complex schwarzian(const ConformalChart& chart, Complex z);

}  // namespace isingff::cft
