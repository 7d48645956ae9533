#include "muskat/stepper.hpp"

#include "muskat/dno.hpp"
#include "muskat/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace muskat {

double SimConfig::dt() const {
  if (dt_rule.kind == DtRule::Kind::kFixed) return dt_rule.value;
  const double dx = 2.0 * std::numbers::pi / static_cast<double>(n_points);
  return dt_rule.value * dx / kappa;
}

void SimConfig::validate() const {
  if (!(kappa > 0.0)) throw std::invalid_argument("config: kappa must be > 0");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("config: epsilon must be >= 0");
  if (!(t_final > 0.0)) throw std::invalid_argument("config: t_final must be > 0");
  if (!(dt_rule.value > 0.0)) throw std::invalid_argument("config: dt rule value must be > 0");
  if (output_cadence == 0) throw std::invalid_argument("config: output_cadence must be >= 1");
  PeriodicGrid probe(n_points);  // validates n_points
  (void)probe;
}

GridFunction SimConfig::initial_profile() const {
  PeriodicGrid g(n_points);
  const InitialData& id = initial;
  GridFunction f0 = [&] {
    switch (id.profile) {
      case InitialData::Profile::kZero:
        return GridFunction(g);
      case InitialData::Profile::kConstant:
        return GridFunction::sample(g, [&](double) { return id.amplitude; });
      case InitialData::Profile::kCosine:
        return GridFunction::sample(
            g, [&](double x) { return id.amplitude * std::cos(id.mode * x); });
      case InitialData::Profile::kSine:
        return GridFunction::sample(
            g, [&](double x) { return id.amplitude * std::sin(id.mode * x); });
      case InitialData::Profile::kKink:
        return GridFunction::sample(g, [&](double x) {
          return id.amplitude * (1.0 - 2.0 * std::abs(x) / std::numbers::pi);
        });
    }
    throw std::logic_error("unreachable");
  }();
  f0 = f0 + id.offset;
  const double w = mollifier_width < 0.0 ? std::sqrt(std::max(epsilon, 0.0)) : mollifier_width;
  if (w > 0.0) f0 = mollify(f0, w);
  return f0;
}

InterfaceState step(const InterfaceState& state, double dt, TimeScheme scheme, bool dealias) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");
  state.f.check_finite();
  const double nu = state.epsilon * dt;

  auto nonlocal = [&](const GridFunction& f) {
    return -state.kappa * apply_dno(f, f).gf;
  };

  GridFunction n1 = nonlocal(state.f);
  GridFunction fnew = [&] {
    if (scheme == TimeScheme::kEuler) {
      return heat_factor(state.f + dt * n1, nu);
    }
    GridFunction fstar = heat_factor(state.f + dt * n1, nu);
    GridFunction n2 = nonlocal(fstar);
    return heat_factor(state.f, nu) + (0.5 * dt) * (heat_factor(n1, nu) + n2);
  }();
  if (dealias) fnew = dealias_two_thirds(fnew);
  fnew.check_finite();
  return {std::move(fnew), state.time + dt, state.kappa, state.epsilon};
}

Trajectory run(const SimConfig& config) {
  config.validate();
  Trajectory traj;
  traj.kappa = config.kappa;
  traj.epsilon = config.epsilon;

  InterfaceState state{config.initial_profile(), 0.0, config.kappa, config.epsilon};
  const double dt = config.dt();
  const auto n_steps = static_cast<std::size_t>(std::ceil(config.t_final / dt - 1e-12));

  auto emit = [&](const InterfaceState& s) {
    DnoResult d = apply_dno(s.f, s.f);
    traj.times.push_back(s.time);
    traj.snapshots.push_back(s.f);
    traj.diagnostics.push_back(record(s, d));
  };

  emit(state);
  for (std::size_t k = 1; k <= n_steps; ++k) {
    const double this_dt = std::min(dt, config.t_final - state.time);
    if (this_dt <= 0.0) break;
    try {
      state = step(state, this_dt, config.scheme, config.dealias);
    } catch (const std::exception& e) {
      traj.failed = true;
      traj.failure = e.what();
      return traj;
    }
    if (k % config.output_cadence == 0 || k == n_steps) emit(state);
  }
  return traj;
}

ViscositySweep vanishing_viscosity(const SimConfig& config,
                                   const std::vector<double>& eps_list) {
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0)) {
      throw std::invalid_argument("vanishing_viscosity: epsilons must be > 0");
    }
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) {
      throw std::invalid_argument("vanishing_viscosity: eps_list must be strictly decreasing");
    }
  }
  ViscositySweep sweep;
  for (double eps : eps_list) {
    SimConfig c = config;
    c.epsilon = eps;
    // dt matched across the sweep: resolve against the base config
    c.dt_rule = {DtRule::Kind::kFixed, config.dt()};
    Trajectory t = run(c);
    if (t.failed) sweep.report.complete = false;
    sweep.trajectories.push_back(std::move(t));
  }
  for (std::size_t j = 0; j + 1 < sweep.trajectories.size(); ++j) {
    const Trajectory& a = sweep.trajectories[j];
    const Trajectory& b = sweep.trajectories[j + 1];
    const std::size_t m = std::min(a.snapshots.size(), b.snapshots.size());
    double d = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      d = std::max(d, max_abs_diff(a.snapshots[i], b.snapshots[i]));
    }
    sweep.report.d.push_back(d);
  }
  return sweep;
}

ComparisonReport comparison_report(const Trajectory& a, const Trajectory& b, double tol) {
  if (a.snapshots.size() != b.snapshots.size() || a.times != b.times ||
      a.kappa != b.kappa || a.epsilon != b.epsilon ||
      (!a.snapshots.empty() && !(a.snapshots[0].grid == b.snapshots[0].grid))) {
    throw std::invalid_argument("comparison_report: trajectories are not matched");
  }
  ComparisonReport rep;
  rep.tol = tol;
  rep.times = a.times;
  for (std::size_t t = 0; t < a.snapshots.size(); ++t) {
    double mx = -std::numeric_limits<double>::infinity();
    double mn = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < a.snapshots[t].size(); ++j) {
      const double d = a.snapshots[t][j] - b.snapshots[t][j];
      mx = std::max(mx, d);
      mn = std::min(mn, d);
    }
    rep.max_pointwise_diff.push_back(mx);
    rep.min_pointwise_diff.push_back(mn);
    rep.linf_diff.push_back(std::max(std::abs(mx), std::abs(mn)));
  }
  // Ordering: if a <= b initially (within tol), it must stay so.
  if (!rep.max_pointwise_diff.empty() && rep.max_pointwise_diff.front() <= tol) {
    for (double d : rep.max_pointwise_diff) {
      if (d > tol) rep.ordering_preserved = false;
    }
  }
  for (std::size_t t = 1; t < rep.linf_diff.size(); ++t) {
    if (rep.linf_diff[t] > rep.linf_diff[t - 1] + tol) rep.contraction_holds = false;
  }
  return rep;
}

}  // namespace muskat
