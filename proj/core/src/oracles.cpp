#include "muskat/oracles.hpp"

#include "muskat/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace muskat {

namespace {
constexpr double kPi = std::numbers::pi;
}

double disk_dno(const GridFunction& g, std::size_t node_index) {
  g.check_finite();
  const std::size_t n = g.size();
  if (node_index >= n) throw std::invalid_argument("disk_dno: node index out of range");
  const double dx = g.grid.spacing();
  GridFunction gpp = dft_derivative(dft_derivative(g));
  if (!std::isfinite(gpp[node_index])) {
    throw std::invalid_argument("disk_dno: divergent second differences at node");
  }

  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == n / 2) {
      // node(n/2) = 0: removable limit [g(x+h)+g(x-h)-2g(x)]/sin^2(h/2) -> 4 g''(x)
      s += 4.0 * gpp[node_index];
      continue;
    }
    const double xp = g.grid.node(j);
    const std::size_t ip = (node_index + j + n / 2) % n;   // x + xp
    const std::size_t im = (node_index + n - ((j + n / 2) % n)) % n;  // x - xp
    const double second = g[ip] + g[im] - 2.0 * g[node_index];
    const double sn = std::sin(0.5 * xp);
    s += second / (sn * sn);
  }
  return -s * dx / (8.0 * kPi);
}

double disk_dno(const GridFunction& g, double x) {
  const double dx = g.grid.spacing();
  const double idx = (x + kPi) / dx;
  const auto j = static_cast<long>(std::llround(idx));
  if (std::abs(idx - static_cast<double>(j)) > 1e-9) {
    throw std::invalid_argument("disk_dno: x does not coincide with a grid node");
  }
  const long n = static_cast<long>(g.size());
  return disk_dno(g, static_cast<std::size_t>(((j % n) + n) % n));
}

double poisson_radial_derivative(const GridFunction& g, double r, double x) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("poisson_radial_derivative: need 0 < r < 1");
  g.check_finite();
  const std::size_t n = g.size();
  const double dx = g.grid.spacing();
  const double zx = r * std::cos(x), zy = r * std::sin(x);
  const double gstar = trig_interp(g, x);
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double xp = g.grid.node(j);
    const double ex = std::cos(xp), ey = std::sin(xp);
    const double dxz = zx - ex, dyz = zy - ey;
    const double d2 = dxz * dxz + dyz * dyz;
    const double zdot = zx * dxz + zy * dyz;
    const double ker = -r * r / (kPi * d2) - (1.0 - r * r) * zdot / (kPi * d2 * d2);
    s += ker * (g[j] - gstar);
  }
  return s * dx;
}

double trig_interp(const GridFunction& u, double x) {
  const std::size_t n = u.size();
  const double dn = static_cast<double>(n);
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double h = x - u.grid.node(j);
    // cardinal function for even n: sin(n h / 2) cot(h / 2) / n
    double m = std::remainder(h, 2.0 * kPi);
    if (std::abs(m) < 1e-14) {
      s += u[j];
    } else {
      s += u[j] * std::sin(0.5 * dn * m) / (dn * std::tan(0.5 * m));
    }
  }
  return s;
}

InteriorValue harmonic_eval(const GridFunction& f, const GridFunction& Theta,
                            FieldPoint p) {
  f.check_finite();
  Theta.check_finite();
  if (!(f.grid == Theta.grid)) throw std::invalid_argument("harmonic_eval: grid mismatch");
  const std::size_t n = f.size();
  const double dx = f.grid.spacing();

  const double f_at_x = trig_interp(f, p.x);
  const double depth = f_at_x - p.y;
  if (depth < 1e-6) {
    throw std::invalid_argument("harmonic_eval: point not strictly interior (margin 1e-6)");
  }

  GridFunction fp = dft_derivative(f);
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double h = p.x - f.grid.node(j);
    const double dy = p.y - f[j];
    double ker;
    if (std::abs(dy) > 30.0) {
      const double sech = 1.0 / std::cosh(dy);
      ker = (std::sin(h) * fp[j] * sech - std::tanh(dy)) / (1.0 - std::cos(h) * sech);
    } else {
      ker = (std::sin(h) * fp[j] - std::sinh(dy)) / (std::cosh(dy) - std::cos(h));
    }
    s += ker * Theta[j];
  }
  InteriorValue out;
  out.value = s * dx / (4.0 * kPi);
  out.reduced_accuracy = depth < 5.0 * dx;
  return out;
}

}  // namespace muskat
