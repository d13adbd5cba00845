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

#include "isingff/cft/descendants.hpp"

#include "isingff/numerics/finite_difference.hpp"

#include <cmath>
#include <stdexcept>

namespace isingff::cft {

DescendantExpression::DescendantExpression(int n_spectators) : n_(n_spectators) {
  terms_[{std::vector<int>(static_cast<std::size_t>(n_), 0),
          std::vector<int>(static_cast<std::size_t>(n_ + 1), 0)}] = 1.0;
}

void DescendantExpression::add(const Key& key, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

DescendantExpression DescendantExpression::differentiate_spectator(int i) const {
  DescendantExpression out(n_);
  out.terms_.clear();
  const auto ui = static_cast<std::size_t>(i);
  for (const auto& [key, c] : terms_) {
    // d/dw (w - z)^{-p} = -p (w - z)^{-p-1}
    if (key.first[ui] != 0) {
      Key k = key;
      k.first[ui] += 1;
      out.add(k, -key.first[ui] * c);
    }
    Key k = key;
    k.second[ui + 1] += 1;
    out.add(k, c);
  }
  return out;
}

DescendantExpression DescendantExpression::differentiate_z() const {
  DescendantExpression out(n_);
  out.terms_.clear();
  for (const auto& [key, c] : terms_) {
    // d/dz (w - z)^{-p} = p (w - z)^{-p-1}
    for (int i = 0; i < n_; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (key.first[ui] == 0) continue;
      Key k = key;
      k.first[ui] += 1;
      out.add(k, key.first[ui] * c);
    }
    Key k = key;
    k.second[0] += 1;
    out.add(k, c);
  }
  return out;
}

DescendantExpression DescendantExpression::apply_virasoro(int k) const {
  if (k < 1) throw std::invalid_argument("apply_virasoro: k must be >= 1");
  DescendantExpression out(n_);
  out.terms_.clear();
  for (int i = 0; i < n_; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (const auto& [key, c] : terms_) {
      Key weight = key;
      weight.first[ui] += k;
      out.add(weight, 0.5 * (k - 1) * c);
    }
    const DescendantExpression d = differentiate_spectator(i);
    for (const auto& [key, c] : d.terms_) {
      Key shifted = key;
      shifted.first[ui] += k - 1;
      out.add(shifted, -c);
    }
  }
  return out;
}

Complex DescendantExpression::evaluate(Complex z, std::span<const Complex> ws) const {
  if (static_cast<int>(ws.size()) != n_) throw std::invalid_argument("evaluate: spectator count");
  const auto id = ConformalChart::identity();
  std::map<std::vector<int>, Complex> cache;
  Complex total = 0.0;
  for (const auto& [key, c] : terms_) {
    auto it = cache.find(key.second);
    if (it == cache.end()) {
      std::vector<FieldInsertion> fields = {{z, key.second[0]}};
      for (int i = 0; i < n_; ++i) {
        fields.push_back({ws[static_cast<std::size_t>(i)], key.second[static_cast<std::size_t>(i + 1)]});
      }
      it = cache.emplace(key.second, fermion_correlator(id, fields)).first;
    }
    Complex term = c * it->second;
    for (int i = 0; i < n_; ++i) {
      const int p = key.first[static_cast<std::size_t>(i)];
      if (p != 0) term /= std::pow(ws[static_cast<std::size_t>(i)] - z, p);
    }
    total += term;
  }
  return total;
}

Complex descendant_correlator(std::span<const int> ks, Complex z,
                              std::span<const FieldInsertion> others) {
  for (const auto& o : others) {
    if (o.point == z) throw std::invalid_argument("descendant_correlator: coincident points");
  }
  DescendantExpression e(static_cast<int>(others.size()));
  for (std::size_t t = ks.size(); t-- > 0;) e = e.apply_virasoro(ks[t]);
  std::vector<Complex> ws;
  for (std::size_t i = 0; i < others.size(); ++i) {
    for (int a = 0; a < others[i].order; ++a) e = e.differentiate_spectator(static_cast<int>(i));
    ws.push_back(others[i].point);
  }
  return e.evaluate(z, ws);
}

Complex descendant_correlator(std::span<const int> ks, Complex z, std::span<const Complex> ws) {
  std::vector<FieldInsertion> others;
  for (auto w : ws) others.push_back({w, 0});
  return descendant_correlator(ks, z, others);
}

namespace {

struct NullFieldTerms {
  Complex second;
  std::vector<Complex> weights;
  std::vector<Complex> drifts;
};

NullFieldTerms null_field_terms(Complex z, std::span<const Complex> ws, DerivativeMethod method) {
  if (ws.size() % 2 == 0) throw std::invalid_argument("null_field_residual: need an odd number of w");
  const auto id = ConformalChart::identity();
  std::vector<Complex> points = {z};
  points.insert(points.end(), ws.begin(), ws.end());
  CorrelatorRequest request{id, points, std::vector<int>(points.size(), 0)};
  auto derivative = [&](std::size_t index, int order) {
    request.derivative_orders.assign(points.size(), 0);
    request.derivative_orders[index] = order;
    return method == DerivativeMethod::exact ? derivative_correlator_exact(request)
                                             : derivative_correlator(request);
  };
  NullFieldTerms t;
  t.second = 0.75 * derivative(0, 2);
  const Complex f = npoint(id, points);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const Complex d = z - ws[i];
    t.weights.push_back(0.5 / (d * d) * f);
    t.drifts.push_back(derivative(i + 1, 1) / d);
  }
  return t;
}

}  // namespace

Complex null_field_residual(Complex z, std::span<const Complex> ws, DerivativeMethod method) {
  const auto t = null_field_terms(z, ws, method);
  Complex r = t.second;
  for (std::size_t i = 0; i < t.weights.size(); ++i) r -= t.weights[i] + t.drifts[i];
  return r;
}

double null_field_scale(Complex z, std::span<const Complex> ws) {
  const auto t = null_field_terms(z, ws, DerivativeMethod::exact);
  double s = std::abs(t.second);
  for (std::size_t i = 0; i < t.weights.size(); ++i) s += std::abs(t.weights[i]) + std::abs(t.drifts[i]);
  return s;
}

}  // namespace isingff::cft
