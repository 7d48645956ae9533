#include "muskat/bie.hpp"

#include "muskat/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace muskat;

namespace {

GridFunction half_cos(const PeriodicGrid& g) {
  return GridFunction::sample(g, [](double x) { return 0.5 * std::cos(x); });
}

double worst_jump_defect(const KernelMatrix& m) {
  // row sums for K, column sums for K*, both against the jump value K[f]1 = 0
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    const double s = (m.operator_tag == OperatorTag::kK) ? m.entries.row(i).sum()
                                                         : m.entries.col(i).sum();
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace

TEST_CASE("flat profile assembles to the zero matrix") {
  PeriodicGrid g(64);
  KernelMatrix m = assemble(GridFunction(g), OperatorTag::kKStar);
  CHECK(m.entries.cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(m.quadrature_weight == doctest::Approx(g.spacing()));
}

TEST_CASE("jump-relation row/column sums vanish and refine at order >= 2") {
  double prev = -1.0;
  for (std::size_t n : {128u, 256u, 512u}) {
    PeriodicGrid g(n);
    const GridFunction f = half_cos(g);
    const double dk = worst_jump_defect(assemble(f, OperatorTag::kK));
    const double dks = worst_jump_defect(assemble(f, OperatorTag::kKStar));
    if (n == 256) {
      CHECK(dk <= 1e-4);
      CHECK(dks <= 1e-4);
    }
    if (prev >= 0.0) CHECK(dk <= prev / 4.0 + 1e-13);
    prev = dk;
  }
}

TEST_CASE("canary: a diagonal-limit error is caught by the jump-relation sums") {
  PeriodicGrid g(256);
  KernelMatrix m = assemble(half_cos(g), OperatorTag::kK);
  m.entries.diagonal().array() += 0.01 * m.quadrature_weight;
  CHECK(worst_jump_defect(m) > 1e-4);
}

TEST_CASE("K is the entrywise transpose of K*") {
  PeriodicGrid g(128);
  GridFunction f = GridFunction::sample(
      g, [](double x) { return 0.4 * std::cos(x) + 0.2 * std::sin(2.0 * x); });
  KernelMatrix k = assemble(f, OperatorTag::kK);
  KernelMatrix ks = assemble(f, OperatorTag::kKStar);
  CHECK((k.entries - ks.entries.transpose()).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("solve_theta on the flat interface") {
  PeriodicGrid g(256);
  GridFunction zero(g);
  GridFunction rhs = GridFunction::sample(g, [](double x) { return std::cos(x); });
  DensitySolution sol = solve_theta(zero, rhs);
  CHECK(max_abs_diff(sol.theta, 2.0 * rhs) <= 1e-10);
  CHECK(std::abs(mean(sol.theta)) <= 1e-12);
  CHECK(sol.residual_norm <= 1e-10);

  DensitySolution z = solve_theta(zero, GridFunction(g));
  CHECK(max_abs(z.theta) <= 1e-12);
}

TEST_CASE("solve_theta rejects a non-derivative right-hand side") {
  PeriodicGrid g(64);
  GridFunction rhs = GridFunction::sample(g, [](double x) { return 1.0 + std::cos(x); });
  CHECK_THROWS_AS(solve_theta(GridFunction(g), rhs), std::invalid_argument);
}

TEST_CASE("solve_theta self-converges under refinement") {
  PeriodicGrid g1(256), g2(512);
  GridFunction f1 = half_cos(g1), f2 = half_cos(g2);
  DensitySolution s1 = solve_theta(f1, dft_derivative(f1));
  DensitySolution s2 = solve_theta(f2, dft_derivative(f2));
  double worst = 0.0;
  for (std::size_t j = 0; j < g1.size(); ++j) {
    worst = std::max(worst, std::abs(s1.theta[j] - s2.theta[2 * j]));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("GMRES path matches the flat identity above the dense cap") {
  PeriodicGrid g(2048);
  GridFunction zero(g);
  GridFunction rhs = GridFunction::sample(g, [](double x) { return std::cos(x); });
  DensitySolution sol = solve_theta(zero, rhs);
  CHECK(max_abs_diff(sol.theta, 2.0 * rhs) <= 1e-8);
  CHECK(std::abs(mean(sol.theta)) <= 1e-12);
}

TEST_CASE("solve_Theta and the derivative consistency identity") {
  PeriodicGrid g(256);
  GridFunction zero(g);
  GridFunction c = GridFunction::sample(g, [](double) { return 1.5; });
  CHECK(max_abs_diff(solve_Theta(zero, c), 2.0 * c) <= 1e-10);

  GridFunction f = half_cos(g);
  GridFunction gg = GridFunction::sample(g, [](double x) { return std::sin(x); });
  GridFunction lhs = dft_derivative(solve_Theta(f, gg));
  GridFunction rhs = solve_theta(f, dft_derivative(gg)).theta;
  CHECK(max_abs_diff(lhs, rhs) <= 1e-8);
}

TEST_CASE("zero-mean subspace is preserved by (1/2 I - A)") {
  PeriodicGrid g(128);
  GridFunction f = half_cos(g);
  KernelMatrix km = assemble(f, OperatorTag::kKStar);
  Eigen::VectorXd theta(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) theta[static_cast<Eigen::Index>(j)] =
      std::sin(3.0 * g.node(j)) + 0.5 * std::cos(g.node(j));
  theta.array() -= theta.mean();
  Eigen::VectorXd out = 0.5 * theta - km.entries * theta;
  CHECK(std::abs(out.mean()) <= 1e-10 * theta.norm());
}

TEST_CASE("sigma_min monitor") {
  PeriodicGrid g(256);
  CHECK(sigma_min_monitor(GridFunction(g)) == doctest::Approx(0.5).epsilon(1e-10));

  double prev = 1.0;
  for (double a : {0.5, 1.0, 2.0, 4.0}) {
    GridFunction f = GridFunction::sample(g, [a](double x) { return a * std::cos(x); });
    const double s = sigma_min_monitor(f);
    CHECK(s < prev);  // monotone decrease in steepness (regression guard)
    prev = s;
  }

  PeriodicGrid big(1024);
  CHECK_THROWS_AS(sigma_min_monitor(GridFunction(big)), std::invalid_argument);
}
