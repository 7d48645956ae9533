#include "muskat/diagnostics.hpp"

#include "muskat/dno.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace muskat;

namespace {

GridFunction random_profile(const PeriodicGrid& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-0.5, 0.5);
  GridFunction u(g);
  for (int k = 1; k <= 8; ++k) {
    const double a = coeff(rng), b = coeff(rng);
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double x = g.node(j);
      u[j] += a * std::cos(k * x) + b * std::sin(k * x);
    }
  }
  return u;
}

double periodic_dist(double a, double b) {
  const double d = std::remainder(a - b, 2.0 * std::numbers::pi);
  return std::abs(d);
}

}  // namespace

TEST_CASE("norms and the diagnostics record") {
  PeriodicGrid g(256);
  GridFunction c3 = GridFunction::sample(g, [](double) { return 3.0; });
  InterfaceState s{c3, 0.0, 1.0, 0.0};
  DiagnosticsRecord r = record(s, apply_dno(c3, c3));
  CHECK(r.sup_norm == doctest::Approx(3.0));
  CHECK(r.lip_seminorm <= 1e-12);
  CHECK(std::abs(r.dn_pairing) <= 1e-8);

  GridFunction cosx = GridFunction::sample(g, [](double x) { return std::cos(x); });
  CHECK(std::abs(l2_norm(cosx) - std::sqrt(std::numbers::pi)) <= 1e-10);
  CHECK(std::abs(lip_seminorm(cosx) - 1.0) <= 2.0 * g.spacing());
}

TEST_CASE("modulus check") {
  PeriodicGrid g(128);
  GridFunction ok = GridFunction::sample(g, [](double x) { return 0.5 * std::sin(x); });
  CHECK(modulus_check(ok, [](double z) { return z; }).pass);

  GridFunction bad = GridFunction::sample(g, [](double x) { return std::sin(x); });
  ModulusReport rep = modulus_check(bad, [](double z) { return 0.5 * z; });
  CHECK_FALSE(rep.pass);
  CHECK(rep.worst_excess > 0.0);
  // worst violating pair sits where the slope is largest, near x = 0
  const double mid = 0.5 * (g.node(rep.worst_i) + g.node(rep.worst_j));
  CHECK(std::min({periodic_dist(mid, 0.0), periodic_dist(mid, std::numbers::pi)}) <= 0.2);
}

TEST_CASE("sup/inf convolution basics") {
  PeriodicGrid g(64);
  GridFunction c = GridFunction::sample(g, [](double) { return 2.5; });
  CHECK(max_abs_diff(sup_convolution(c, 0.3), c) <= 1e-14);
  CHECK(max_abs_diff(inf_convolution(c, 0.3), c) <= 1e-14);
  CHECK_THROWS(sup_convolution(c, 0.0));
  CHECK_THROWS(inf_convolution(c, -1.0));

  std::mt19937_64 rng(13);
  GridFunction f = random_profile(g, rng);
  GridFunction fs = sup_convolution(f, 0.1);
  GridFunction fi = inf_convolution(f, 0.1);
  GridFunction fs_small = sup_convolution(f, 0.05);
  GridFunction dual = -1.0 * sup_convolution(-1.0 * f, 0.1);
  const double dx = g.spacing();
  for (std::size_t j = 0; j < g.size(); ++j) {
    CHECK(fs[j] >= f[j] - 1e-14);
    CHECK(fi[j] <= f[j] + 1e-14);
    CHECK(fs_small[j] <= fs[j] + 1e-14);  // f^delta nonincreasing as delta decreases
    CHECK(dual[j] == fi[j]);              // exact duality
    const double second =
        fs[(j + 1) % g.size()] - 2.0 * fs[j] + fs[(j + g.size() - 1) % g.size()];
    CHECK(second >= -dx * dx / 0.1 - 1e-12);  // semiconvexity
  }
}

TEST_CASE("inf convolution against a brute-force finer-grid oracle") {
  PeriodicGrid g(128);
  const double delta = 0.1;
  GridFunction f = GridFunction::sample(g, [](double x) { return std::abs(std::sin(x)); });
  GridFunction fi = inf_convolution(f, delta);
  const std::size_t i0 = g.size() / 2;  // node at x = 0
  double brute = 1e300;
  const std::size_t fine = 10 * g.size();
  for (std::size_t m = 0; m < fine; ++m) {
    const double y = -std::numbers::pi + 2.0 * std::numbers::pi * m / fine;
    const double d = periodic_dist(0.0, y);
    brute = std::min(brute, std::abs(std::sin(y)) + d * d / (2.0 * delta));
  }
  CHECK(std::abs(fi[i0] - brute) <= g.spacing());
}

TEST_CASE("large delta flattens the sup convolution to the maximum") {
  PeriodicGrid g(64);
  std::mt19937_64 rng(29);
  GridFunction f = random_profile(g, rng);
  GridFunction fs = sup_convolution(f, 1e6);
  double fmax = -1e300;
  for (std::size_t j = 0; j < g.size(); ++j) fmax = std::max(fmax, f[j]);
  // the paraboloid penalty is at most diam^2/(2 delta) anywhere on the torus
  const double slack = std::numbers::pi * std::numbers::pi / (2.0 * 1e6) + 1e-12;
  for (std::size_t j = 0; j < g.size(); ++j) {
    CHECK(fs[j] <= fmax + 1e-12);
    CHECK(fs[j] >= fmax - slack);
  }
}

TEST_CASE("sup convolution output is Lipschitz-controlled") {
  PeriodicGrid g(128);
  std::mt19937_64 rng(31);
  GridFunction f = random_profile(g, rng);
  const double delta = 0.2;
  GridFunction fs = sup_convolution(f, delta);
  // paraboloid slope at the geodesic diameter pi bounds the output slope
  const double bound = std::numbers::pi / delta + 1e-9;
  CHECK(lip_seminorm(fs) <= bound);
}

TEST_CASE("space-time convolutions reduce to the spatial scan for static data") {
  PeriodicGrid g(64);
  std::mt19937_64 rng(37);
  GridFunction f = random_profile(g, rng);
  std::vector<GridFunction> snaps{f, f, f};
  std::vector<double> times{0.0, 0.1, 0.2};
  std::vector<GridFunction> fs = sup_convolution(snaps, times, 0.1);
  std::vector<GridFunction> fi = inf_convolution(snaps, times, 0.1);
  REQUIRE(fs.size() == 3);
  GridFunction spatial_s = sup_convolution(f, 0.1);
  GridFunction spatial_i = inf_convolution(f, 0.1);
  // the middle slice can borrow from both neighbors in time, but with equal
  // snapshots the time term only penalizes, so the spatial scan wins
  for (std::size_t t = 0; t < 3; ++t) {
    CHECK(max_abs_diff(fs[t], spatial_s) <= 1e-14);
    CHECK(max_abs_diff(fi[t], spatial_i) <= 1e-14);
  }
}
