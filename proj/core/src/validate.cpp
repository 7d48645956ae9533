#include "muskat/validate.hpp"

#include "muskat/bie.hpp"
#include "muskat/diagnostics.hpp"
#include "muskat/dno.hpp"
#include "muskat/oracles.hpp"
#include "muskat/spectral.hpp"
#include "muskat/stepper.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace muskat {

double max_principle_tol(std::size_t n_points) {
  const double dx = 2.0 * std::numbers::pi / static_cast<double>(n_points);
  return 1e-6 + 10.0 * dx * dx;
}

namespace {

std::string ratio_detail(double measured, double threshold) {
  std::ostringstream ss;
  ss << measured << " (threshold " << threshold << ")";
  return ss.str();
}

CheckResult bound_check(const std::string& name, double measured, double threshold) {
  return {name, measured <= threshold, ratio_detail(measured, threshold)};
}

GridFunction random_band_limited(const PeriodicGrid& g, std::mt19937_64& rng,
                                 std::size_t max_mode, double amp) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  GridFunction u(g);
  for (std::size_t k = 1; k <= max_mode; ++k) {
    const double a = amp * coeff(rng), b = amp * coeff(rng);
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double x = g.node(j);
      u[j] += a * std::cos(static_cast<double>(k) * x) + b * std::sin(static_cast<double>(k) * x);
    }
  }
  return u;
}

}  // namespace

std::vector<CheckResult> run_validation(std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);

  // --- spectral identities -------------------------------------------------
  {
    PeriodicGrid g(256);
    GridFunction u = random_band_limited(g, rng, 40, 1.0);
    const GridFunction hh = hilbert_transform(hilbert_transform(u));
    const GridFunction target = -1.0 * (u + (-mean(u)));
    out.push_back(bound_check("hilbert_involution", max_abs_diff(hh, target), 1e-12));
    out.push_back(bound_check("absdash_is_hilbert_of_derivative",
                              max_abs_diff(abs_derivative(u),
                                           hilbert_transform(dft_derivative(u))),
                              1e-12));
  }

  // --- flat-interface DN identity -----------------------------------------
  {
    PeriodicGrid g(256);
    GridFunction zero(g);
    double worst = 0.0;
    for (int k = 1; k <= 5; ++k) {
      GridFunction gk = GridFunction::sample(g, [k](double x) { return std::cos(k * x); });
      worst = std::max(worst, max_abs_diff(apply_dno(zero, gk).gf, dno_flat(gk)));
    }
    out.push_back(bound_check("flat_dn_identity", worst, 1e-8));
  }

  // --- disk oracle ---------------------------------------------------------
  {
    PeriodicGrid g(512);
    double worst = 0.0;
    for (int m = 1; m <= 4; ++m) {
      GridFunction gm = GridFunction::sample(g, [m](double x) { return std::cos(m * x); });
      for (std::size_t i = 0; i < g.size(); i += 64) {
        worst = std::max(worst, std::abs(disk_dno(gm, i) - m * std::cos(m * g.node(i))));
      }
    }
    out.push_back(bound_check("disk_oracle_modes", worst, 1e-6));
  }
  {
    // r -> 1 limit of the Poisson radial derivative approaches disk_dno
    PeriodicGrid g(4096);
    GridFunction gm = GridFunction::sample(
        g, [](double x) { return std::cos(x) + 0.2 * std::cos(3.0 * x); });
    const std::size_t i = 1024;
    const double ref = disk_dno(gm, i);
    double prev = 1e300;
    bool decreasing = true;
    for (int j = 4; j <= 9; ++j) {
      const double r = 1.0 - std::pow(2.0, -j);
      const double err = std::abs(poisson_radial_derivative(gm, r, g.node(i)) - ref);
      if (j > 4 && err > prev && err > 1e-12) decreasing = false;  // allow roundoff floor
      prev = err;
    }
    out.push_back({"disk_vs_poisson_limit", decreasing && prev < 1e-2,
                   "monotone error decay to " + std::to_string(prev)});
  }

  // --- BIE structure -------------------------------------------------------
  {
    PeriodicGrid g(256);
    GridFunction f = GridFunction::sample(g, [](double x) { return 0.5 * std::cos(x); });
    KernelMatrix k = assemble(f, OperatorTag::kK);
    KernelMatrix ks = assemble(f, OperatorTag::kKStar);
    double rowdef = 0.0, transdef = 0.0;
    for (Eigen::Index i = 0; i < k.entries.rows(); ++i) {
      rowdef = std::max(rowdef, std::abs(k.entries.row(i).sum()));
    }
    transdef = (k.entries - ks.entries.transpose()).cwiseAbs().maxCoeff();
    out.push_back(bound_check("jump_relation_rowsums", rowdef, 1e-4));
    out.push_back(bound_check("kstar_transpose_identity", transdef, 1e-13));

    GridFunction zero(g);
    GridFunction rhs = GridFunction::sample(g, [](double x) { return std::cos(x); });
    DensitySolution sol = solve_theta(zero, rhs);
    out.push_back(bound_check("theta_flat_is_twice_rhs",
                              max_abs_diff(sol.theta, 2.0 * rhs), 1e-10));
  }

  // --- DN positivity and shift invariance ---------------------------------
  {
    PeriodicGrid g(128);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      GridFunction f = random_band_limited(g, rng, 4, 0.3);
      GridFunction gg = random_band_limited(g, rng, 4, 0.5);
      DnoResult r = apply_dno(f, gg);
      const double l2 = l2_norm(gg);
      worst = std::max(worst, -(r.pairing) / std::max(l2 * l2, 1e-30));
    }
    out.push_back(bound_check("dn_pairing_positivity", worst, 1e-8));

    GridFunction f = GridFunction::sample(g, [](double x) { return 0.3 * std::sin(x); });
    out.push_back({"dn_vertical_shift_invariance",
                   dno_vertical_shift_invariance(f, f, 2.5), "tolerance 1e-8"});
  }

  // --- maximum principles on a short trajectory ---------------------------
  {
    SimConfig c;
    c.n_points = 128;
    c.kappa = 1.0;
    c.epsilon = 0.01;
    c.t_final = 0.3;
    c.initial = {InitialData::Profile::kKink, 0.5, 1, 0.0};
    c.mollifier_width = 0.05;
    c.output_cadence = 5;
    Trajectory t = run(c);
    const double tol = max_principle_tol(c.n_points);
    bool ok = !t.failed;
    double worst = 0.0;
    for (std::size_t i = 1; i < t.diagnostics.size(); ++i) {
      worst = std::max({worst,
                        t.diagnostics[i].sup_norm - t.diagnostics[i - 1].sup_norm,
                        t.diagnostics[i].lip_seminorm - t.diagnostics[i - 1].lip_seminorm,
                        t.diagnostics[i].l2_norm - t.diagnostics[i - 1].l2_norm});
    }
    out.push_back({"maximum_principles", ok && worst <= tol, ratio_detail(worst, tol)});
  }

  // --- comparison principle ------------------------------------------------
  {
    SimConfig c;
    c.n_points = 128;
    c.epsilon = 0.01;
    c.t_final = 0.3;
    c.output_cadence = 5;
    c.initial = {InitialData::Profile::kSine, 0.3, 1, 0.0};
    Trajectory t1 = run(c);
    SimConfig c2 = c;
    c2.initial.offset = 0.15;  // f2(0) = f1(0) + 0.15 >= f1(0)
    Trajectory t2 = run(c2);
    const double tol = max_principle_tol(c.n_points);
    ComparisonReport rep = comparison_report(t1, t2, tol);
    out.push_back({"comparison_principle",
                   rep.ordering_preserved && rep.contraction_holds,
                   "ordering and L-inf contraction within " + std::to_string(tol)});
  }

  // --- operator bounds -----------------------------------------------------
  {
    PeriodicGrid g(256);
    double worst_floor = 1e300, worst_cal = 0.0;
    for (double a : {0.5, 1.0, 2.0, 4.0}) {
      GridFunction f = GridFunction::sample(g, [a](double x) { return a * std::cos(x); });
      const double lip = lip_seminorm(f);
      const double smin = sigma_min_monitor(f);
      worst_floor = std::min(worst_floor, smin * std::pow(1.0 + lip, 2.5));
      DensitySolution sol = solve_theta(f, dft_derivative(f));
      const double ratio = l2_norm(sol.theta) /
                           (std::pow(1.0 + lip, 2.5) * l2_norm(dft_derivative(f)));
      worst_cal = std::max(worst_cal, ratio);
    }
    out.push_back({"sigma_min_floor", worst_floor >= kSigmaMinCalibration,
                   ratio_detail(worst_floor, kSigmaMinCalibration)});
    out.push_back(bound_check("theta_operator_bound", worst_cal, kThetaOperatorCalibration));
  }

  // --- sup/inf convolution properties --------------------------------------
  {
    PeriodicGrid g(64);
    const double delta = 0.1;
    const double dx = g.spacing();
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      GridFunction f = random_band_limited(g, rng, 8, 0.5);
      GridFunction fs = sup_convolution(f, delta);
      GridFunction fi = inf_convolution(f, delta);
      GridFunction dual = -1.0 * sup_convolution(-1.0 * f, delta);
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (fs[j] < f[j] - 1e-14 || fi[j] > f[j] + 1e-14) ok = false;
        if (std::abs(dual[j] - fi[j]) > 0.0) ok = false;
        const double second =
            fs[(j + 1) % g.size()] - 2.0 * fs[j] + fs[(j + g.size() - 1) % g.size()];
        worst = std::max(worst, -(second) - dx * dx / delta);
      }
    }
    out.push_back({"sup_inf_convolution", ok && worst <= 1e-12,
                   "pointwise bounds, duality, semiconvexity " + std::to_string(worst)});
  }

  return out;
}

}  // namespace muskat
