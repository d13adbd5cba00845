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

#include "isingff/sle/generator.hpp"

#include "isingff/sle/martingale.hpp"
#include "isingff/sle/partition_function.hpp"
#include "isingff/voa/modes.hpp"

#include <boost/rational.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

namespace isingff::sle {

GeneratorOperators GeneratorOperators::make(int twice_L) {
  if (twice_L < 1) throw std::invalid_argument("GeneratorOperators: truncation below psi");
  GeneratorOperators ops;
  std::map<voa::Monomial, Eigen::Index> index;
  for (const auto& m : voa::basis_states(twice_L)) {
    if (m.size() % 2 == 1) {
      index[m] = static_cast<Eigen::Index>(ops.basis.size());
      ops.basis.push_back(m);
    }
  }
  const auto n = static_cast<Eigen::Index>(ops.basis.size());
  voa::TruncationConfig cfg;
  cfg.twice_L = twice_L;
  auto matrix = [&](auto apply) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto image = apply(voa::FockVector::monomial(ops.basis[static_cast<std::size_t>(j)]));
      for (const auto& [m, c] : image.terms()) out(index.at(m), j) = boost::rational_cast<double>(c);
    }
    return out;
  };
  ops.lm1 = matrix([&](const voa::FockVector& v) { return voa::apply_virasoro_mode(-1, v, cfg); });
  ops.drift = matrix([&](const voa::FockVector& v) {
    return voa::Rational(-2) * voa::apply_virasoro_mode(-2, v, cfg) +
           voa::Rational(3, 2) * voa::apply_virasoro_mode(-1, voa::apply_virasoro_mode(-1, v, cfg), cfg);
  });
  return ops;
}

voa::FockVector generator_drift_on_psi() {
  const auto cfg = voa::TruncationConfig::make(3);
  const auto psi = voa::FockVector::monomial({1});
  return voa::Rational(-2) * voa::apply_virasoro_mode(-2, psi, cfg) +
         voa::Rational(3, 2) * voa::apply_virasoro_mode(-1, voa::apply_virasoro_mode(-1, psi, cfg), cfg);
}

GeneratorPath evolve_martingale_generator(const GeneratorOperators& ops, const GeneratorConfig& cfg,
                                          RngStream rng) {
  if (!(cfg.dt > 0.0) || !(cfg.t_max > 0.0) || cfg.checkpoints < 1) {
    throw std::invalid_argument("evolve_martingale_generator: bad configuration");
  }
  const auto n = static_cast<Eigen::Index>(ops.basis.size());
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd a_dt = ops.drift * cfg.dt;
  const double sigma = std::sqrt(kKappa * cfg.dt);
  const int total = static_cast<int>(std::lround(cfg.t_max / cfg.dt));

  GeneratorPath path;
  Eigen::MatrixXd g = id;
  int next = 1;
  for (int step = 1; step <= total; ++step) {
    const double dxi = sigma * rng.normal();
    g = g * (id + a_dt - dxi * ops.lm1);
    const int mark = static_cast<int>(std::lround(static_cast<double>(total) * next / cfg.checkpoints));
    if (step == mark) {
      path.times.push_back(step * cfg.dt);
      path.coefficients.push_back(g.col(0));
      ++next;
    }
  }
  return path;
}

bool GeneratorReport::martingale_holds() const {
  for (const auto& row : z_score) {
    for (double z : row) {
      if (!(std::abs(z) < 3.0)) return false;
    }
  }
  return true;
}

GeneratorReport generator_mc_test(const GeneratorConfig& cfg, int paths, std::uint64_t seed) {
  if (paths < 2) throw std::invalid_argument("generator_mc_test: need at least two paths");
  const auto ops = GeneratorOperators::make(cfg.twice_L);
  std::vector<GeneratorPath> runs(static_cast<std::size_t>(paths));
  parallel_for(paths, [&](int p) {
    runs[static_cast<std::size_t>(p)] =
        evolve_martingale_generator(ops, cfg, RngStream(seed, static_cast<std::uint64_t>(p)));
  });

  GeneratorReport report;
  report.basis = ops.basis;
  report.times = runs[0].times;
  const auto n = static_cast<Eigen::Index>(ops.basis.size());
  report.initial = Eigen::VectorXd::Unit(n, 0);
  for (std::size_t c = 0; c < report.times.size(); ++c) {
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(n), sq = Eigen::VectorXd::Zero(n);
    for (const auto& r : runs) sum += r.coefficients[c];
    const Eigen::VectorXd mean = sum / paths;
    for (const auto& r : runs) sq += (r.coefficients[c] - mean).cwiseAbs2();
    std::vector<double> m(static_cast<std::size_t>(n)), se(m.size()), z(m.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      m[k] = mean(i);
      se[k] = std::sqrt(sq(i) / (paths - 1.0) / paths);
      const double diff = mean(i) - report.initial(i);
      z[k] = se[k] > 0.0 ? diff / se[k] : (std::abs(diff) < 1e-12 ? 0.0 : HUGE_VAL);
    }
    report.mean.push_back(m);
    report.standard_error.push_back(se);
    report.z_score.push_back(z);
  }
  return report;
}

}  // namespace isingff::sle
