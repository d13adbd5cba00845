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

#include "isingff/sle/martingale.hpp"

#include "isingff/cft/chart.hpp"
#include "isingff/cft/correlators.hpp"
#include "isingff/sle/partition_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace isingff::sle {

namespace {

using Complex = std::complex<double>;

int thread_count() {
  if (const char* env = std::getenv("ISINGFF_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

void parallel_for(int n, const std::function<void(int)>& f) {
  const int threads = std::min(thread_count(), std::max(n, 1));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += threads) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

void ObservableSpec::validate(double swallow_eps) const {
  for (std::size_t i = 1; i < boundary_points.size(); ++i) {
    if (!(boundary_points[i - 1] < boundary_points[i])) {
      throw std::invalid_argument("ObservableSpec: seeds must be strictly increasing");
    }
  }
  for (std::size_t k = 0; k < field_points.size(); ++k) {
    for (double x : boundary_points) {
      if (std::abs(field_points[k] - x) < swallow_eps) {
        throw std::invalid_argument("ObservableSpec: field point too close to a seed");
      }
    }
    for (std::size_t l = 0; l < k; ++l) {
      if (field_points[k] == field_points[l]) throw std::invalid_argument("ObservableSpec: coincident field points");
    }
  }
}

Complex observable(const LoewnerEnsemble& ens) {
  if (ens.status != PathStatus::alive) throw std::logic_error("observable: path is not alive");
  std::vector<Complex> points(ens.X.begin(), ens.X.end());
  Complex jacobian = 1.0;
  for (const auto& p : ens.tracked) {
    points.push_back(p.g);
    jacobian *= std::sqrt(p.g_prime);
  }
  if (ens.tracked.empty()) return 1.0;
  const auto id = cft::ConformalChart::identity();
  return jacobian * cft::npoint(id, points) / partition_function(std::span<const double>(ens.X));
}

LoewnerEnsemble make_ensemble(const ObservableSpec& spec, const LoewnerConfig& cfg,
                              std::uint64_t seed, std::uint64_t stream_id) {
  spec.validate(cfg.swallow_eps);
  return LoewnerEnsemble::make(spec.boundary_points, spec.field_points, cfg,
                               RngStream(seed, stream_id));
}

bool MartingaleReport::martingale_holds() const {
  return std::all_of(checkpoints.begin(), checkpoints.end(),
                     [](const Checkpoint& c) { return std::abs(c.z_score) < 3.0; });
}

MartingaleReport martingale_mc_test(const ObservableSpec& spec, const LoewnerConfig& cfg, int paths,
                                    double t_max, std::uint64_t seed, int checkpoints) {
  if (paths < 1 || checkpoints < 1 || !(t_max > 0.0)) {
    throw std::invalid_argument("martingale_mc_test: need paths, checkpoints and t_max positive");
  }
  spec.validate(cfg.swallow_eps);
  const int total_steps = static_cast<int>(std::lround(t_max / cfg.dt));
  std::vector<int> marks;
  for (int c = 1; c <= checkpoints; ++c) {
    marks.push_back(static_cast<int>(std::lround(static_cast<double>(total_steps) * c / checkpoints)));
  }

  // values[path][checkpoint]; a path that stops early leaves NaN from then on.
  const Complex nan(std::nan(""), std::nan(""));
  std::vector<std::vector<Complex>> values(static_cast<std::size_t>(paths),
                                           std::vector<Complex>(marks.size(), nan));
  std::vector<char> lost(static_cast<std::size_t>(paths), 0);
  parallel_for(paths, [&](int path) {
    auto ens = make_ensemble(spec, cfg, seed, static_cast<std::uint64_t>(path));
    int done = 0;
    for (std::size_t c = 0; c < marks.size(); ++c) {
      evolve(ens, marks[c] - done);
      done = marks[c];
      if (ens.status != PathStatus::alive) {
        lost[static_cast<std::size_t>(path)] = 1;
        return;
      }
      values[static_cast<std::size_t>(path)][c] = observable(ens);
    }
  });

  MartingaleReport report;
  report.paths = paths;
  report.initial = observable(make_ensemble(spec, cfg, seed, 0));
  for (char l : lost) report.swallowed += l;
  for (std::size_t c = 0; c < marks.size(); ++c) {
    Checkpoint cp;
    cp.t = marks[c] * cfg.dt;
    Complex sum = 0.0;
    // Surviving paths only, reduced in index order.
    for (int p = 0; p < paths; ++p) {
      if (lost[static_cast<std::size_t>(p)]) continue;
      sum += values[static_cast<std::size_t>(p)][c];
      ++cp.alive;
    }
    if (cp.alive < 2) {
      report.checkpoints.push_back(cp);
      continue;
    }
    cp.mean = sum / static_cast<double>(cp.alive);
    double var_re = 0.0, var_im = 0.0;
    for (int p = 0; p < paths; ++p) {
      if (lost[static_cast<std::size_t>(p)]) continue;
      const Complex d = values[static_cast<std::size_t>(p)][c] - cp.mean;
      var_re += d.real() * d.real();
      var_im += d.imag() * d.imag();
    }
    const double n = cp.alive;
    const double se_re = std::sqrt(var_re / (n - 1.0) / n);
    const double se_im = std::sqrt(var_im / (n - 1.0) / n);
    const Complex diff = cp.mean - report.initial;
    const double z_re = se_re > 0.0 ? diff.real() / se_re : (diff.real() == 0.0 ? 0.0 : HUGE_VAL);
    const double z_im = se_im > 0.0 ? diff.imag() / se_im : (diff.imag() == 0.0 ? 0.0 : HUGE_VAL);
    cp.standard_error = std::max(se_re, se_im);
    cp.z_score = std::abs(z_re) >= std::abs(z_im) ? z_re : z_im;
    report.checkpoints.push_back(cp);
  }
  return report;
}

}  // namespace isingff::sle
