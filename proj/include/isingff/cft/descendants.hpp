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

#include "isingff/cft/correlators.hpp"

#include <map>
#include <span>
#include <vector>

namespace isingff::cft {

/// Linear combination of terms c * prod_i (w_i - z)^{-p_i} * d^alpha F where
/// F(z, w_1, ..., w_n) = <psi(z) prod psi(w_i)>_H and alpha holds derivative
/// orders for (z, w_1, ..., w_n).
class DescendantExpression {
 public:
  explicit DescendantExpression(int n_spectators);

  /// Applies sum_i {(1/2)(k - 1)/(w_i - z)^k - (w_i - z)^{-(k-1)} d/dw_i}.
  DescendantExpression apply_virasoro(int k) const;
  DescendantExpression differentiate_spectator(int i) const;
  DescendantExpression differentiate_z() const;

  std::size_t term_count() const { return terms_.size(); }
  /// Evaluates with exact Pfaffian derivatives of F on H.
  Complex evaluate(Complex z, std::span<const Complex> ws) const;

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  void add(const Key& key, double c);

  int n_;
  std::map<Key, double> terms_;
};

/// <(L_{-k_1} ... L_{-k_r} psi)(z) prod_i d^{a_i} psi(w_i)>_H with ks written left
/// to right as in the state; the rightmost operator acts first.
Complex descendant_correlator(std::span<const int> ks, Complex z,
                              std::span<const FieldInsertion> others);
Complex descendant_correlator(std::span<const int> ks, Complex z, std::span<const Complex> ws);

enum class DerivativeMethod { exact, finite_difference };

/// [(3/4) d_z^2 - sum_i ((1/2)/(z - w_i)^2 + 1/(z - w_i) d/dw_i)] <psi(z) prod psi(w_i)>_H.
/// ws holds an odd number of points.
Complex null_field_residual(Complex z, std::span<const Complex> ws,
                            DerivativeMethod method = DerivativeMethod::exact);

/// Sum of absolute values of the individual terms of null_field_residual, the
/// scale against which the residual is judged.
double null_field_scale(Complex z, std::span<const Complex> ws);

}  // namespace isingff::cft
