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

#include "isingff/cft/ope.hpp"

#include "isingff/cft/correlators.hpp"
#include "isingff/numerics/finite_difference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isingff::cft {

namespace {

std::vector<FieldInsertion> as_fields(const std::vector<Complex>& points) {
  std::vector<FieldInsertion> out;
  for (auto p : points) out.push_back({p, 0});
  return out;
}

struct Evaluation {
  Complex product;
  Complex lower;    // singular terms below the leading power
  Complex leading;  // coefficient of the leading power
  int power;
};

class Probe {
 public:
  Probe(const ConformalChart& chart, OpePair pair, const OpeProbe& probe)
      : chart_(chart), pair_(pair), probe_(probe), spectators_(as_fields(probe.spectators)) {
    const std::size_t parity = probe.spectators.size() % 2;
    if ((pair == OpePair::T_psi) != (parity == 1)) {
      throw std::invalid_argument("ope_singularity_check: spectator parity makes the correlator vanish");
    }
    const Complex w = probe.base;
    const Complex w_arr[1] = {w};
    switch (pair) {
      case OpePair::psi_psi:
        leading_ = fermion_correlator(chart, spectators_);
        break;
      case OpePair::T_psi: {
        auto f = with_front({{w, 0}});
        leading_ = 0.5 * fermion_correlator(chart, f);
        f[0].order = 1;
        d_psi_ = fermion_correlator(chart, f);
        f[0].order = 2;
        regular_display_ = 0.75 * fermion_correlator(chart, f);
        break;
      }
      case OpePair::T_T: {
        leading_ = 0.25 * fermion_correlator(chart, spectators_);
        t_w_ = virasoro_correlator(chart, w_arr, spectators_);
        const ComplexFunction t_of = [&](Complex x) {
          const Complex x_arr[1] = {x};
          return virasoro_correlator(chart, x_arr, spectators_);
        };
        d_t_w_ = central_diff(t_of, w, 1);
        break;
      }
    }
  }

  Evaluation at(double eps) const {
    const Complex d = eps * probe_.direction;
    const Complex z = probe_.base + d;
    const Complex w = probe_.base;
    Evaluation e{};
    e.leading = leading_;
    switch (pair_) {
      case OpePair::psi_psi:
        e.product = fermion_correlator(chart_, with_front({{z, 0}, {w, 0}}));
        e.lower = 0.0;
        e.power = 1;
        break;
      case OpePair::T_psi: {
        const Complex z_arr[1] = {z};
        e.product = virasoro_correlator(chart_, z_arr, with_front({{w, 0}}));
        e.lower = d_psi_ / d;
        e.power = 2;
        break;
      }
      case OpePair::T_T: {
        const Complex zw[2] = {z, w};
        e.product = virasoro_correlator(chart_, zw, spectators_);
        e.lower = 2.0 * t_w_ / (d * d) + d_t_w_ / d;
        e.power = 4;
        break;
      }
    }
    return e;
  }

  Complex separation(double eps) const { return eps * probe_.direction; }
  Complex regular_display() const { return regular_display_; }

 private:
  std::vector<FieldInsertion> with_front(std::vector<FieldInsertion> front) const {
    front.insert(front.end(), spectators_.begin(), spectators_.end());
    return front;
  }

  const ConformalChart& chart_;
  OpePair pair_;
  const OpeProbe& probe_;
  std::vector<FieldInsertion> spectators_;
  Complex leading_ = 0.0, d_psi_ = 0.0, t_w_ = 0.0, d_t_w_ = 0.0, regular_display_ = 0.0;
};

}  // namespace

std::string to_string(OpePair pair) {
  switch (pair) {
    case OpePair::psi_psi: return "psi_psi";
    case OpePair::T_psi: return "T_psi";
    case OpePair::T_T: return "T_T";
  }
  return "unknown";
}

OpeProbe default_probe(OpePair pair) {
  OpeProbe p;
  p.base = {0.15, 0.45};
  p.direction = std::polar(1.0, 0.3);
  if (pair == OpePair::T_psi) {
    p.spectators = {{-0.55, 0.3}};
  } else {
    p.spectators = {{-0.55, 0.3}, {0.7, 0.65}};
  }
  return p;
}

OpeReport ope_singularity_check(const ConformalChart& chart, OpePair pair, const OpeProbe& probe) {
  if (probe.eps.size() < 2) throw std::invalid_argument("ope_singularity_check: need two eps values");
  const Probe p(chart, pair, probe);
  OpeReport r;
  r.pair = pair;
  r.chart_kind = chart.kind_name();
  r.eps = probe.eps;
  r.max_deviation = 0.0;
  for (double eps : probe.eps) {
    const auto e = p.at(eps);
    const Complex sep = p.separation(eps);
    const Complex rem = e.product - e.lower - e.leading / std::pow(sep, e.power);
    r.remainders.push_back(rem);
    r.max_deviation = std::max(r.max_deviation, std::abs(rem));
  }
  const double eps_min = *std::min_element(probe.eps.begin(), probe.eps.end());
  auto coefficient = [&](double eps) {
    const auto e = p.at(eps);
    return (e.product - e.lower) * std::pow(p.separation(eps), e.power);
  };
  const auto e0 = p.at(eps_min);
  r.expected_leading = e0.leading;
  r.fitted_leading = 2.0 * coefficient(0.5 * eps_min) - coefficient(eps_min);
  r.leading_error = std::abs(r.fitted_leading - r.expected_leading) /
                    std::max(std::abs(r.expected_leading), 1e-300);

  const auto first = std::max_element(probe.eps.begin(), probe.eps.end()) - probe.eps.begin();
  const auto last = std::min_element(probe.eps.begin(), probe.eps.end()) - probe.eps.begin();
  r.growth = std::abs(r.remainders[static_cast<std::size_t>(last)]) /
             std::max(std::abs(r.remainders[static_cast<std::size_t>(first)]), 1.0);
  r.bounded = r.growth <= 10.0;
  r.regular_fit = pair == OpePair::T_psi ? r.remainders[static_cast<std::size_t>(last)] : 0.0;
  r.regular_display = p.regular_display();
  return r;
}

OpeReport ope_singularity_check(const ConformalChart& chart, OpePair pair) {
  return ope_singularity_check(chart, pair, default_probe(pair));
}

}  // namespace isingff::cft
