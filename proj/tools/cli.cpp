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

#include "cli.hpp"

#include "config.hpp"

#include "isingff/cft/correlators.hpp"
#include "isingff/cft/descendants.hpp"
#include "isingff/cft/ope.hpp"
#include "isingff/cft/ward.hpp"
#include "isingff/lattice/operators.hpp"
#include "isingff/lattice/partition_function.hpp"
#include "isingff/lattice/scaling.hpp"
#include "isingff/numerics/rng.hpp"
#include "isingff/sle/generator.hpp"
#include "isingff/sle/martingale.hpp"
#include "isingff/sle/partition_function.hpp"
#include "isingff/voa/modes.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace isingff::cli {
namespace {

using Complex = std::complex<double>;

struct Outcome {
  int code = kPass;
  std::ostringstream summary;
  std::ostringstream csv;
  std::string plot;

  void check(bool ok) {
    if (!ok && code == kPass) code = kFail;
  }
};

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::vector<std::string> chart_names(const std::string& selection) {
  if (selection == "all") return {"identity", "moebius", "strip", "vertical-strip"};
  return {selection};
}

cft::ConformalChart named_chart(const std::string& name) {
  if (name == "identity") return cft::ConformalChart::identity();
  if (name == "moebius") return cft::ConformalChart::moebius(2.0, 1.0, 1.0, 3.0);
  if (name == "strip") return cft::ConformalChart::horizontal_strip_to_H(1.0);
  return lattice::vertical_strip_chart(1.0);
}

const std::vector<std::string> kChartChoices = {"all", "identity", "moebius", "strip", "vertical-strip"};

/// "a:b" is a + b i; a bare number is real.
Complex parse_complex(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return {std::stod(s), 0.0};
  return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
}

std::string mode_name(int twice_abs) {
  return twice_abs % 2 == 0 ? std::to_string(-twice_abs / 2) : "-" + std::to_string(twice_abs) + "/2";
}

std::string pretty(const voa::FockVector& v) {
  if (v.is_zero()) return "zero vector";
  std::string out;
  for (const auto& [m, c] : v.terms()) {
    const bool negative = c < voa::Rational(0);
    const voa::Rational a = negative ? -c : c;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (a != voa::Rational(1) || m.empty()) out += voa::to_string(a) + (m.empty() ? "" : "·");
    for (int k : m) out += "ψ_{" + mode_name(k) + "}";
    out += "|0>";
  }
  return out;
}

struct Subcommand {
  CLI::App* app;
  std::function<void(Outcome&)> body;
};

void add_lattice_verify(CLI::App& root, std::vector<Subcommand>& subs) {
  struct Opts {
    int m = 1, n = 2;
    double beta = 0.4;
  };
  auto o = std::make_shared<Opts>();
  auto* app = root.add_subcommand("lattice-verify", "Transfer-matrix Ising strip against exact checks");
  app->add_option("--m", o->m, "Half-width M of the strip (columns -M..M)")->check(CLI::Range(0, 6));
  app->add_option("--n", o->n, "Half-height N (rows)")->check(CLI::Range(1, 64));
  app->add_option("--beta", o->beta, "Inverse temperature")->check(CLI::NonNegativeNumber);
  subs.push_back({app, [o](Outcome& r) {
    const auto geom = lattice::StripGeometry::make(o->m, o->n, o->beta);
    r.summary << "Transfer-matrix Ising strip M=" << o->m << " N=" << o->n << " beta=" << o->beta << "\n";
    r.csv << "check,value,tolerance,pass\n";
    auto row = [&](const std::string& name, const std::string& what, double value, double tol) {
      const bool ok = value <= tol;
      r.check(ok);
      r.csv << name << "," << value << "," << tol << "," << ok << "\n";
      r.summary << "  " << what << ": " << value << " (tolerance " << tol << ") " << verdict(ok) << "\n";
    };
    const double tm = lattice::partition_function(geom);
    if ((2 * o->m + 1) * (2 * o->n + 1) <= 25) {
      const double en = lattice::partition_function_enum(geom);
      r.summary << "  partition function: transfer matrix " << tm << ", enumeration " << en << "\n";
      row("partition_rel_diff", "transfer-matrix vs brute-force partition function, relative difference",
          std::abs(tm - en) / std::abs(en), 1e-9);
    } else {
      r.summary << "  partition function: transfer matrix " << tm << " (enumeration skipped, more than 25 spins)\n";
    }
    if (o->m <= 3) {
      row("clifford_max_dev", "Clifford anticommutation relations of the spin-chain generators",
          lattice::clifford_relation_error(lattice::build_spin_and_clifford(geom)), 1e-12);
    }
    row("rotation_max_dev", "conjugation by the transfer matrix preserves the Clifford bilinear form",
        lattice::induced_rotation_check(geom), 1e-9);
  }});
}

void add_lattice_scaling(CLI::App& root, std::vector<Subcommand>& subs) {
  struct Opts {
    std::vector<int> widths = {2, 3, 4};
    double beta = lattice::critical_beta();
    int height_factor = 60;
  };
  auto o = std::make_shared<Opts>();
  auto* app = root.add_subcommand("lattice-scaling", "Lattice fermion correlator against its continuum limit");
  app->add_option("--widths", o->widths, "Strip half-widths M, comma separated")->delimiter(',');
  app->add_option("--beta", o->beta, "Inverse temperature (default critical)");
  app->add_option("--height-factor", o->height_factor, "Strip half-height N as a multiple of M");
  subs.push_back({app, [o](Outcome& r) {
    const auto report = lattice::scaling_limit_report(o->widths, o->beta, o->height_factor);
    lattice::write_scaling_csv(r.csv, report);
    r.summary << "Lattice fermion two-point function against the continuum strip kernel\n";
    for (const auto& w : report.warnings) r.summary << "  warning: " << w << "\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      const auto& row = report.rows[i];
      r.summary << "  M=" << row.M << " N=" << row.N << " delta=" << row.delta << " relative error " << row.rel_error;
      if (i > 0) {
        const bool ok = row.rel_error <= 1.2 * report.rows[i - 1].rel_error;
        r.check(ok);
        r.summary << " (non-increasing within 20%: " << verdict(ok) << ")";
      }
      r.summary << "\n";
    }
    r.plot = "set datafile separator ','\nset logscale y\nset xlabel 'M'\nset ylabel 'relative error'\n"
             "plot 'lattice-scaling.csv' using 1:7 skip 1 with linespoints title 'lattice vs continuum'\n";
  }});
}

void add_cft_ward(CLI::App& root, std::vector<Subcommand>& subs) {
  struct Opts {
    std::string chart = "all";
    double eta = 1e-4;
    double tolerance = 1e-6;
  };
  auto o = std::make_shared<Opts>();
  auto* app = root.add_subcommand("cft-ward", "Virasoro Ward identity for fermion correlators");
  app->add_option("--chart", o->chart, "Chart")->check(CLI::IsMember(kChartChoices));
  app->add_option("--eta", o->eta, "Step of the coincident-point limit");
  app->add_option("--tolerance", o->tolerance, "Pass threshold on |lhs - rhs|");
  subs.push_back({app, [o](Outcome& r) {
    const Complex z{0.1, 0.45};
    const std::vector<std::vector<Complex>> configs = {{{-0.4, 0.3}, {0.5, 0.6}},
                                                       {{-0.4, 0.3}, {0.5, 0.6}, {-0.1, 0.8}, {0.3, 0.15}}};
    r.summary << "Ward identity: T(z) inserted into fermion correlators equals the sum of "
                 "conformal-weight and translation terms, in each chart\n";
    r.csv << "chart,fermions,lhs_re,lhs_im,rhs_re,rhs_im,abs_error\n";
    for (const auto& name : chart_names(o->chart)) {
      const auto chart = named_chart(name);
      for (const auto& ws : configs) {
        const auto w = cft::ward_domain(chart, z, ws, o->eta);
        const double err = std::abs(w.lhs - w.rhs);
        r.check(err < o->tolerance);
        r.csv << name << "," << ws.size() << "," << w.lhs.real() << "," << w.lhs.imag() << "," << w.rhs.real()
              << "," << w.rhs.imag() << "," << err << "\n";
        r.summary << "  " << name << ", " << ws.size() << " fermions: |lhs - rhs| = " << err << " "
                  << verdict(err < o->tolerance) << "\n";
      }
    }
  }});
}

void add_cft_nullfield(CLI::App& root, std::vector<Subcommand>& subs) {
  struct Opts {
    int configs = 20;
    std::uint64_t seed = 1;
    double tolerance = 1e-5;
  };
  auto o = std::make_shared<Opts>();
  auto* app = root.add_subcommand("cft-nullfield", "Level-two null-field equation at random points");
  app->add_option("--configs", o->configs, "Random configurations per size")->check(CLI::PositiveNumber);
  app->add_option("--seed", o->seed, "Random seed");
  app->add_option("--tolerance", o->tolerance, "Pass threshold on the relative residual");
  subs.push_back({app, [o](Outcome& r) {
    r.summary << "Null-field equation (L_{-2} - (3/4) L_{-1}^2) psi = 0 inside correlators with 1, 3, 5 spectators\n";
    r.csv << "config,spectators,exact_relative,finite_difference_relative\n";
    double worst_exact = 0.0, worst_fd = 0.0;
    for (int c = 0; c < o->configs; ++c) {
      for (int spectators : {1, 3, 5}) {
        RngStream rng(o->seed, static_cast<std::uint64_t>(c * 8 + spectators));
        std::vector<Complex> pts;
        for (int i = 0; i <= spectators; ++i) pts.emplace_back(-2.0 + 4.0 * rng.uniform(), 0.2 + 1.8 * rng.uniform());
        const std::span<const Complex> ws(pts.data() + 1, pts.size() - 1);
        const double scale = cft::null_field_scale(pts[0], ws);
        const double ex = std::abs(cft::null_field_residual(pts[0], ws)) / scale;
        const double fd =
            std::abs(cft::null_field_residual(pts[0], ws, cft::DerivativeMethod::finite_difference)) / scale;
        worst_exact = std::max(worst_exact, ex);
        worst_fd = std::max(worst_fd, fd);
        r.csv << c << "," << spectators << "," << ex << "," << fd << "\n";
      }
    }
    r.check(worst_exact < o->tolerance && worst_fd < o->tolerance);
    r.summary << "  worst relative residual, exact derivatives: " << worst_exact << "\n"
              << "  worst relative residual, finite differences: " << worst_fd << "\n"
              << "  " << verdict(worst_exact < o->tolerance && worst_fd < o->tolerance) << " (tolerance "
              << o->tolerance << ")\n";
  }});
}

void add_cft_ope(CLI::App& root, std::vector<Subcommand>& subs) {
  struct Opts {
    std::string chart = "all";
    double tolerance = 1e-4;
  };
  auto o = std::make_shared<Opts>();
  auto* app = root.add_subcommand("cft-ope", "Singular parts of the psi psi, T psi and T T products");
  app->add_option("--chart", o->chart, "Chart")->check(CLI::IsMember(kChartChoices));
  app->add_option("--tolerance", o->tolerance, "Pass threshold on the leading-coefficient error");
  subs.push_back({app, [o](Outcome& r) {
    r.summary << "Operator product expansions: subtracting the singular part leaves a bounded remainder\n";
    r.csv << "chart,pair,expected_leading_re,expected_leading_im,fitted_leading_re,fitted_leading_im,leading_error,"
             "growth,bounded\n";
    for (const auto& name : chart_names(o->chart)) {
      const auto chart = named_chart(name);
      for (auto pair : {cft::OpePair::psi_psi, cft::OpePair::T_psi, cft::OpePair::T_T}) {
        const auto rep = cft::ope_singularity_check(chart, pair);
        const bool ok = rep.bounded && rep.leading_error < o->tolerance;
        r.check(ok);
        r.csv << name << "," << cft::to_string(pair) << "," << rep.expected_leading.real() << ","
              << rep.expected_leading.imag() << "," << rep.fitted_leading.real() << "," << rep.fitted_leading.imag()
              << "," << rep.leading_error << "," << rep.growth << "," << rep.bounded << "\n";
        r.summary << "  " << name << " " << cft::to_string(pair) << ": leading error " << rep.leading_error
                  << ", remainder " << (rep.bounded ? "bounded" : "growing") << " " << verdict(ok) << "\n";
      }
    }
  }});
}

void add_voa_commutators(CLI::App& root, std::vector<Subcommand>& subs) {
  struct Opts {
    double level = 6;
    std::string a0 = "0";
  };
  auto o = std::make_shared<Opts>();
  auto* app = root.add_subcommand("voa-commutators", "Commutation relations of the Sugawara Virasoro modes");
  app->add_option("--level", o->level, "Truncation level L (integer or half-integer)");
  app->add_option("--a0", o->a0, "Constant in L_0")->check(CLI::IsMember({"0", "1/16"}));
  subs.push_back({app, [o](Outcome& r) {
    const voa::Rational L(static_cast<long long>(std::lround(2 * o->level)), 2);
    const voa::Rational a0 = o->a0 == "0" ? voa::Rational(0) : voa::Rational(1, 16);
    const auto report = voa::commutator_tables(voa::TruncationConfig::make(L, a0));
    r.csv << "family,m,n,max_deviation_numerator,max_deviation_denominator,states\n";
    std::istringstream lines(report.to_text());
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
      std::replace(line.begin(), line.end(), ' ', ',');
      r.csv << line << "\n";
    }
    const bool exact = report.max_psi == voa::Rational(0) && report.max_virasoro == voa::Rational(0);
    r.summary << "Commutators [L_m, psi_n] = -(m/2 + n) psi_{m+n} and [L_m, L_n] = (m - n) L_{m+n} + "
                 "(1/2) m(m^2 - 1)/12 delta_{m+n,0}, exact rational arithmetic, L = "
              << voa::to_string(L) << ", a0 = " << o->a0 << "\n"
              << "  max deviation, fermion family: " << voa::to_string(report.max_psi) << "\n"
              << "  max deviation, Virasoro family: " << voa::to_string(report.max_virasoro) << "\n";
    if (a0 == voa::Rational(0)) {
      r.check(exact);
      r.summary << "  " << verdict(exact) << "\n";
    } else {
      // Diagnostic: the shifted L_0 must break the relations.
      r.check(!exact);
      r.summary << "  diagnostic: shifted L_0 " << (exact ? "did not break" : "breaks") << " the relations "
                << verdict(!exact) << "\n";
    }
  }});
}

void add_voa_singular(CLI::App& root, std::vector<Subcommand>& subs) {
  struct Opts {
    double level = 4;
  };
  auto o = std::make_shared<Opts>();
  auto* app = root.add_subcommand("voa-singular", "Level-two singular vector over psi_{-1/2}|0>");
  app->add_option("--level", o->level, "Truncation level L");
  subs.push_back({app, [o](Outcome& r) {
    const auto cfg = voa::TruncationConfig::make(voa::Rational(static_cast<long long>(std::lround(2 * o->level)), 2));
    const auto minus = voa::singular_vector(-1, cfg);
    const auto plus = voa::singular_vector(+1, cfg);
    const bool ok = minus.is_zero() && plus == voa::FockVector::monomial({5}, 3);
    r.check(ok);
    r.summary << "(L_{-2} ± (3/4) L_{-1}^2) ψ_{-1/2}|0>\n"
              << "sign=-1: " << pretty(minus) << "; sign=+1: " << pretty(plus) << "\n"
              << verdict(ok) << "\n";
    r.csv << "sign,state,coefficient\n";
    for (const auto& [sign, v] : {std::pair{-1, minus}, std::pair{1, plus}}) {
      for (const auto& [m, c] : v.terms()) r.csv << sign << "," << pretty(voa::FockVector::monomial(m)) << "," << voa::to_string(c) << "\n";
    }
  }});
}

void add_kappa(CLI::App* app, double& kappa) {
  app->add_option("--kappa", kappa, "SLE parameter; only 3 is supported")->check(CLI::IsMember({3.0}));
}

void add_sle_pde(CLI::App& root, std::vector<Subcommand>& subs) {
  struct Opts {
    std::vector<double> points = {0.0, 1.0, 2.0, 4.0};
    double tolerance = 1e-5;
    double kappa = 3;
  };
  auto o = std::make_shared<Opts>();
  auto* app = root.add_subcommand("sle-pde", "PDE system of the multiple SLE_3 partition function");
  app->add_option("--points", o->points, "Curve seeds x_1 < ... < x_2n, comma separated")->delimiter(',');
  app->add_option("--tolerance", o->tolerance, "Pass threshold on relative residuals");
  add_kappa(app, o->kappa);
  subs.push_back({app, [o](Outcome& r) {
    r.summary << "Partition function Z = Pf(1/(x_i - x_j)): translation, scaling and special conformal "
                 "covariance and the second-order null-field equation at each seed\n";
    r.csv << "equation,residual,scale,relative\n";
    for (const auto& p : sle::pde_residuals(o->points)) {
      const bool ok = p.relative() < o->tolerance;
      r.check(ok);
      r.csv << p.name << "," << p.residual << "," << p.scale << "," << p.relative() << "\n";
      r.summary << "  " << p.name << ": relative residual " << p.relative() << " " << verdict(ok) << "\n";
    }
  }});
}

void add_sle_martingale(CLI::App& root, std::vector<Subcommand>& subs) {
  struct Opts {
    int paths = 10000;
    double dt = 1e-4, t_max = 0.3, swallow_eps = 1e-3, kappa = 3;
    std::uint64_t seed = 42;
    int checkpoints = 5;
    std::vector<double> boundary = {0.0, 10.0};
    std::vector<std::string> fields = {"-1:2", "2:2"};
    bool broken_drift = false;
  };
  auto o = std::make_shared<Opts>();
  auto* app = root.add_subcommand("sle-martingale", "Monte Carlo martingale test of the fermion observable");
  app->add_option("--paths", o->paths, "Number of sample paths")->check(CLI::Range(1000, 100000000));
  app->add_option("--dt", o->dt, "Time step")->check(CLI::PositiveNumber);
  app->add_option("--t-max", o->t_max, "Final capacity time")->check(CLI::PositiveNumber);
  app->add_option("--seed", o->seed, "Random seed");
  app->add_option("--swallow-eps", o->swallow_eps, "Distance at which a point counts as swallowed");
  app->add_option("--checkpoints", o->checkpoints, "Evenly spaced comparison times")->check(CLI::PositiveNumber);
  app->add_option("--boundary", o->boundary, "Curve seeds on the real line, comma separated")->delimiter(',');
  app->add_option("--fields", o->fields, "Fermion points re:im, comma separated")->delimiter(',');
  app->add_flag("--broken-drift", o->broken_drift, "Drop the pair interaction from the drift (negative control)");
  add_kappa(app, o->kappa);
  subs.push_back({app, [o](Outcome& r) {
    sle::ObservableSpec spec{o->boundary, {}};
    for (const auto& f : o->fields) spec.field_points.push_back(parse_complex(f));
    sle::LoewnerConfig cfg;
    cfg.dt = o->dt;
    cfg.swallow_eps = o->swallow_eps;
    cfg.interaction_drift = !o->broken_drift;
    const auto rep = sle::martingale_mc_test(spec, cfg, o->paths, o->t_max, o->seed, o->checkpoints);
    r.csv << "path_count,t,obs_mean,obs_se,z_score,swallowed_frac,obs_mean_im\n";
    r.csv << rep.paths << ",0," << rep.initial.real() << ",0,0,0," << rep.initial.imag() << "\n";
    for (const auto& c : rep.checkpoints) {
      r.csv << c.alive << "," << c.t << "," << c.mean.real() << "," << c.standard_error << "," << c.z_score << ","
            << rep.swallowed_fraction() << "," << c.mean.imag() << "\n";
    }
    r.summary << "Martingale property of the fermion observable g'(W)^{1/2} <psi(X) psi(g(W))> / Z(X) under "
              << spec.boundary_points.size() / 2 << "-curve SLE_3"
              << (o->broken_drift ? " (broken drift: pair interaction dropped)" : "") << "\n"
              << "  initial value " << rep.initial << ", " << rep.paths << " paths, swallowed fraction "
              << rep.swallowed_fraction() << "\n";
    for (const auto& c : rep.checkpoints) {
      r.summary << "  t=" << c.t << " mean " << c.mean << " se " << c.standard_error << " z " << c.z_score << "\n";
    }
    if (!rep.conclusive()) {
      r.code = kInconclusive;
      r.summary << "  INCONCLUSIVE: swallowed fraction above 5%\n";
    } else {
      r.check(rep.martingale_holds());
      r.summary << "  " << verdict(rep.martingale_holds()) << " (|z| < 3 at every checkpoint)\n";
    }
    r.plot = "set datafile separator ','\nset xlabel 't'\nset ylabel 'z'\n"
             "plot 'sle-martingale.csv' using 2:5 skip 1 with linespoints title 'z-score', 3 notitle, -3 notitle\n";
  }});
}

void add_sle_generator(CLI::App& root, std::vector<Subcommand>& subs) {
  struct Opts {
    int paths = 10000;
    double dt = 1e-4, t_max = 0.3, level = 4, kappa = 3;
    std::uint64_t seed = 42;
    int checkpoints = 5;
  };
  auto o = std::make_shared<Opts>();
  auto* app = root.add_subcommand("sle-generator", "Monte Carlo test of the Fock-space martingale generator");
  app->add_option("--paths", o->paths, "Number of sample paths")->check(CLI::Range(1000, 100000000));
  app->add_option("--dt", o->dt, "Time step")->check(CLI::PositiveNumber);
  app->add_option("--t-max", o->t_max, "Final time")->check(CLI::PositiveNumber);
  app->add_option("--level", o->level, "Truncation level")->check(CLI::Range(1.0, 8.0));
  app->add_option("--seed", o->seed, "Random seed");
  app->add_option("--checkpoints", o->checkpoints, "Evenly spaced comparison times")->check(CLI::PositiveNumber);
  add_kappa(app, o->kappa);
  subs.push_back({app, [o](Outcome& r) {
    sle::GeneratorConfig cfg;
    cfg.twice_L = static_cast<int>(std::lround(2 * o->level));
    cfg.dt = o->dt;
    cfg.t_max = o->t_max;
    cfg.checkpoints = o->checkpoints;
    const bool exact = sle::generator_drift_on_psi().is_zero();
    const auto rep = sle::generator_mc_test(cfg, o->paths, o->seed);
    r.csv << "t,state,mean,standard_error,z_score\n";
    for (std::size_t c = 0; c < rep.times.size(); ++c) {
      for (std::size_t k = 0; k < rep.basis.size(); ++k) {
        r.csv << rep.times[c] << "," << pretty(voa::FockVector::monomial(rep.basis[k])) << "," << rep.mean[c][k] << ","
              << rep.standard_error[c][k] << "," << rep.z_score[c][k] << "\n";
      }
    }
    double worst = 0.0;
    for (const auto& zs : rep.z_score) {
      for (double z : zs) worst = std::max(worst, std::abs(z));
    }
    r.check(exact && rep.martingale_holds());
    r.summary << "Itô generator dG = G (dt (-2 L_{-2} + (3/2) L_{-1}^2) - dxi L_{-1}) on ψ_{-1/2}|0>, "
              << rep.basis.size() << " graded coefficients, " << o->paths << " paths\n"
              << "  dt term annihilates ψ_{-1/2}|0> exactly: " << (exact ? "yes" : "no") << "\n"
              << "  max |z| over coefficients and checkpoints: " << worst << "\n"
              << "  " << verdict(exact && rep.martingale_holds()) << "\n";
  }});
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  // Config entries go right after the subcommand so that later flags win.
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    if (path.empty()) continue;
    try {
      const auto extra = config_arguments(read_config(path));
      if (args.size() > 1) args.insert(args.begin() + 2, extra.begin(), extra.end());
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    break;
  }

  CLI::App root("Verification suite for the free-fermion description of the critical Ising model",
                "isingff-cli");
  root.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)->always_capture_default();
  root.require_subcommand(1);
  std::vector<Subcommand> subs;
  add_lattice_verify(root, subs);
  add_lattice_scaling(root, subs);
  add_cft_ward(root, subs);
  add_cft_nullfield(root, subs);
  add_cft_ope(root, subs);
  add_voa_commutators(root, subs);
  add_voa_singular(root, subs);
  add_sle_pde(root, subs);
  add_sle_martingale(root, subs);
  add_sle_generator(root, subs);
  std::string out_dir = "isingff_out", config_path;
  for (auto& s : subs) {
    s.app->add_option("--out", out_dir, "Output directory");
    s.app->add_option("--config", config_path, "key=value file; flags given on the command line win");
  }

  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    root.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return root.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    root.exit(e, out, err);
    err << root.help();
    return kUsage;
  }

  for (auto& s : subs) {
    if (!s.app->parsed()) continue;
    const std::string name = s.app->get_name();
    Outcome r;
    r.csv.precision(12);
    r.summary.precision(6);
    try {
      s.body(r);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    try {
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      write_file(dir / (name + ".csv"), r.csv.str());
      write_file(dir / (name + "_summary.txt"), r.summary.str());
      write_file(dir / (name + "_config.txt"), "subcommand=" + name + "\n" + s.app->config_to_str(true, false));
      if (r.plot.empty()) {
        r.plot = "set datafile separator ','\nplot '" + name + ".csv' using 0:" + "2 skip 1 with points title '" +
                 name + "'\n";
      }
      write_file(dir / (name + ".gp"), r.plot);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    out << r.summary.str();
    return r.code;
  }
  return kUsage;
}

}  // namespace isingff::cli
