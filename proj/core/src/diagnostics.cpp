#include "muskat/diagnostics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace muskat {

double sup_norm(const GridFunction& u) { return max_abs(u); }

double lip_seminorm(const GridFunction& u) {
  const std::size_t n = u.size();
  const double dx = u.grid.spacing();
  double m = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    m = std::max(m, std::abs(u[(j + 1) % n] - u[j]) / dx);
  }
  return m;
}

double l2_norm(const GridFunction& u) {
  double s = 0.0;
  for (double v : u.values) s += v * v;
  return std::sqrt(u.grid.spacing() * s);
}

DiagnosticsRecord record(const InterfaceState& state, const DnoResult& dno_result) {
  DiagnosticsRecord r;
  r.time = state.time;
  r.sup_norm = sup_norm(state.f);
  r.lip_seminorm = lip_seminorm(state.f);
  r.l2_norm = l2_norm(state.f);
  r.dn_pairing = dno_result.pairing;
  r.theta_l2 = l2_norm(dno_result.theta_used.theta);
  return r;
}

namespace {

double periodic_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * std::numbers::pi));
}

}  // namespace

ModulusReport modulus_check(const GridFunction& f,
                            const std::function<double(double)>& gamma, double tol) {
  const std::size_t n = f.size();
  ModulusReport rep;
  rep.worst_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = periodic_distance(f.grid.node(i), f.grid.node(j));
      const double excess = std::abs(f[i] - f[j]) - gamma(d);
      if (excess > rep.worst_excess) {
        rep.worst_excess = excess;
        rep.worst_i = i;
        rep.worst_j = j;
      }
    }
  }
  rep.pass = rep.worst_excess <= tol;
  return rep;
}

GridFunction sup_convolution(const GridFunction& f, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("sup_convolution: delta must be > 0");
  const std::size_t n = f.size();
  GridFunction out(f.grid);
  for (std::size_t i = 0; i < n; ++i) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double d = periodic_distance(f.grid.node(i), f.grid.node(j));
      m = std::max(m, f[j] - d * d / (2.0 * delta));
    }
    out[i] = m;
  }
  return out;
}

GridFunction inf_convolution(const GridFunction& g, double delta) {
  return -1.0 * sup_convolution(-1.0 * g, delta);
}

std::vector<GridFunction> sup_convolution(const std::vector<GridFunction>& snaps,
                                          const std::vector<double>& times,
                                          double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("sup_convolution: delta must be > 0");
  if (snaps.size() != times.size()) {
    throw std::invalid_argument("sup_convolution: snapshot/time count mismatch");
  }
  std::vector<GridFunction> out;
  out.reserve(snaps.size());
  for (std::size_t ti = 0; ti < snaps.size(); ++ti) {
    GridFunction slice(snaps[ti].grid);
    const std::size_t n = slice.size();
    for (std::size_t i = 0; i < n; ++i) {
      double m = -std::numeric_limits<double>::infinity();
      for (std::size_t sj = 0; sj < snaps.size(); ++sj) {
        const double dt = times[ti] - times[sj];
        for (std::size_t j = 0; j < n; ++j) {
          const double d = periodic_distance(slice.grid.node(i), slice.grid.node(j));
          m = std::max(m, snaps[sj][j] - (d * d + dt * dt) / (2.0 * delta));
        }
      }
      slice[i] = m;
    }
    out.push_back(std::move(slice));
  }
  return out;
}

std::vector<GridFunction> inf_convolution(const std::vector<GridFunction>& snaps,
                                          const std::vector<double>& times,
                                          double delta) {
  std::vector<GridFunction> neg;
  neg.reserve(snaps.size());
  for (const auto& s : snaps) neg.push_back(-1.0 * s);
  auto sup = sup_convolution(neg, times, delta);
  for (auto& s : sup) s = -1.0 * s;
  return sup;
}

}  // namespace muskat
