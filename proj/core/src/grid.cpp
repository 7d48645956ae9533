#include "muskat/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace muskat {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

PeriodicGrid::PeriodicGrid(std::size_t n_points) : n_(n_points) {
  if (n_points < 8 || !is_power_of_two(n_points)) {
    throw std::invalid_argument("PeriodicGrid: n_points must be a power of two >= 8, got " +
                                std::to_string(n_points));
  }
  dx_ = kTwoPi / static_cast<double>(n_points);
}

double PeriodicGrid::node(std::size_t j) const {
  return -std::numbers::pi + static_cast<double>(j) * dx_;
}

std::vector<double> PeriodicGrid::nodes() const {
  std::vector<double> xs(n_);
  for (std::size_t j = 0; j < n_; ++j) xs[j] = node(j);
  return xs;
}

GridFunction::GridFunction(PeriodicGrid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw std::invalid_argument("GridFunction: value count does not match grid size");
  }
  check_finite();
}

GridFunction::GridFunction(PeriodicGrid g) : grid(g), values(g.size(), 0.0) {}

GridFunction GridFunction::sample(const PeriodicGrid& g,
                                  const std::function<double(double)>& fn) {
  std::vector<double> v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) v[j] = fn(g.node(j));
  return GridFunction(g, std::move(v));
}

void GridFunction::check_finite() const {
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (!std::isfinite(values[j])) {
      throw std::invalid_argument("GridFunction: non-finite value at node " + std::to_string(j));
    }
  }
}

namespace {
void require_same_grid(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("GridFunction: grid mismatch");
}
}  // namespace

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  GridFunction out(a.grid);
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] + b[j];
  return out;
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  GridFunction out(a.grid);
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] - b[j];
  return out;
}

GridFunction operator*(double c, const GridFunction& a) {
  GridFunction out(a.grid);
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = c * a[j];
  return out;
}

GridFunction operator+(const GridFunction& a, double c) {
  GridFunction out(a.grid);
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] + c;
  return out;
}

double mean(const GridFunction& u) {
  double s = 0.0;
  for (double v : u.values) s += v;
  return s / static_cast<double>(u.size());
}

double max_abs(const GridFunction& u) {
  double m = 0.0;
  for (double v : u.values) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

GridFunction shift_nodes(const GridFunction& u, long k) {
  const long n = static_cast<long>(u.size());
  GridFunction out(u.grid);
  for (long j = 0; j < n; ++j) {
    long src = ((j - k) % n + n) % n;
    out[static_cast<std::size_t>(j)] = u[static_cast<std::size_t>(src)];
  }
  return out;
}

}  // namespace muskat
