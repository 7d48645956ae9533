#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace muskat {

/// Uniform sampling of the torus [-pi, pi). n_points must be a power of two,
/// at least 8; nodes are x_j = -pi + j*spacing.
class PeriodicGrid {
 public:
  explicit PeriodicGrid(std::size_t n_points);

  std::size_t size() const { return n_; }
  double spacing() const { return dx_; }
  double node(std::size_t j) const;
  std::vector<double> nodes() const;

  bool operator==(const PeriodicGrid&) const = default;

 private:
  std::size_t n_;
  double dx_;
};

/// Real-valued periodic samples on a PeriodicGrid. All values are finite and
/// the length matches the grid; violated invariants throw.
struct GridFunction {
  PeriodicGrid grid;
  std::vector<double> values;

  GridFunction(PeriodicGrid g, std::vector<double> v);
  explicit GridFunction(PeriodicGrid g);  // zeros

  static GridFunction sample(const PeriodicGrid& g,
                             const std::function<double(double)>& fn);

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t j) const { return values[j]; }
  double& operator[](std::size_t j) { return values[j]; }

  void check_finite() const;  // throws std::invalid_argument on NaN/inf
};

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(double c, const GridFunction& a);
GridFunction operator+(const GridFunction& a, double c);

double mean(const GridFunction& u);
double max_abs(const GridFunction& u);
double max_abs_diff(const GridFunction& a, const GridFunction& b);

/// Cyclic shift by k nodes: result[j] = u[(j - k) mod n], i.e. the samples of
/// x -> u(x - k*spacing).
GridFunction shift_nodes(const GridFunction& u, long k);

}  // namespace muskat
