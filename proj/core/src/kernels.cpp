#include "muskat/kernels.hpp"

#include "muskat/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace muskat {

namespace {

constexpr double kQuarterInvPi = 1.0 / (4.0 * std::numbers::pi);

// Threshold beyond which the hyperbolic ratio is evaluated in scaled form.
constexpr double kLargeArg = 30.0;

double wrapped_gap(const PeriodicGrid& g, std::size_t i, std::size_t j) {
  return g.node(i) - g.node(j);
}

/// (num_h * sinh(d) + num_c) / (cosh(d) - cosv), stable for large |d|.
double hyperbolic_ratio(double d, double num_c, double cosv) {
  if (std::abs(d) <= kLargeArg) {
    const double denom = std::cosh(d) - cosv;
    if (denom < 1e-300) {
      throw std::invalid_argument("kernel integrand: coincident nodes (denominator underflow)");
    }
    return (std::sinh(d) + num_c) / denom;
  }
  // Divide through by cosh(d); 1/cosh stays representable far past |d| = 30.
  const double sech = 1.0 / std::cosh(d);
  return (std::tanh(d) + num_c * sech) / (1.0 - cosv * sech);
}

}  // namespace

ProfileSamples::ProfileSamples(const GridFunction& profile)
    : f(profile), df(dft_derivative(profile)), d2f(dft_derivative(df)) {}

double newtonian(double x, double y) {
  const double c = std::cos(x);
  if (std::abs(y) > kLargeArg) {
    // ln(cosh y - cos x) = |y| - ln 2 + ln(1 + e^{-2|y|} - 2 c e^{-|y|})
    const double e = std::exp(-std::abs(y));
    return kQuarterInvPi * (std::abs(y) - std::numbers::ln2 + std::log1p(e * e - 2.0 * c * e));
  }
  const double arg = std::cosh(y) - c;
  if (arg < 1e-300) {
    throw std::invalid_argument("newtonian: singular point (0, 0) mod 2pi");
  }
  return kQuarterInvPi * std::log(arg);
}

KernelSample kstar_integrand(const ProfileSamples& p, std::size_t i, std::size_t j) {
  if (i == j) {
    const double fp = p.df[i];
    return {-p.d2f[i] / (4.0 * std::numbers::pi * (1.0 + fp * fp)), true};
  }
  const double h = wrapped_gap(p.f.grid, i, j);
  const double d = p.f[i] - p.f[j];
  const double v = hyperbolic_ratio(d, -std::sin(h) * p.df[i], std::cos(h));
  return {kQuarterInvPi * v, false};
}

KernelSample k_integrand(const ProfileSamples& p, std::size_t i, std::size_t j) {
  if (i == j) {
    const double fp = p.df[i];
    return {-p.d2f[i] / (4.0 * std::numbers::pi * (1.0 + fp * fp)), true};
  }
  const double h = wrapped_gap(p.f.grid, i, j);
  const double d = p.f[i] - p.f[j];
  // numerator sin(h) f'_j - sinh(d) = -(sinh(d) - sin(h) f'_j)
  const double v = -hyperbolic_ratio(d, -std::sin(h) * p.df[j], std::cos(h));
  return {kQuarterInvPi * v, false};
}

KernelSample dno_integrand(const ProfileSamples& p, std::size_t i, std::size_t j) {
  if (i == j) {
    throw std::invalid_argument("dno_integrand: diagonal requested; use the log-split path");
  }
  const double h = wrapped_gap(p.f.grid, i, j);
  const double d = p.f[i] - p.f[j];
  const double fp = p.df[i];
  double v;
  if (std::abs(d) <= kLargeArg) {
    const double denom = std::cosh(d) - std::cos(h);
    if (denom < 1e-300) {
      throw std::invalid_argument("dno_integrand: coincident nodes");
    }
    v = (std::sin(h) + std::sinh(d) * fp) / denom;
  } else {
    const double sech = 1.0 / std::cosh(d);
    v = (std::sin(h) * sech + std::tanh(d) * fp) / (1.0 - std::cos(h) * sech);
  }
  return {kQuarterInvPi * v, false};
}

KernelSample smooth_log_integrand(const ProfileSamples& p, std::size_t i, std::size_t j) {
  if (i == j) {
    const double fp = p.df[i];
    return {std::log1p(fp * fp), true};
  }
  const double h = wrapped_gap(p.f.grid, i, j);
  const double d2 = 0.5 * (p.f[i] - p.f[j]);
  const double s = std::sin(0.5 * h);
  if (std::abs(d2) <= kLargeArg) {
    const double r = std::sinh(d2) / s;
    return {std::log1p(r * r), false};
  }
  // ln(1 + (sinh(d2)/s)^2) = 2 ln|sinh(d2)| - 2 ln|s| + ln(1 + (s/sinh(d2))^2)
  const double ls = 2.0 * (std::abs(d2) - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * std::abs(d2))));
  const double inv = s / std::sinh(d2);
  return {ls - 2.0 * std::log(std::abs(s)) + std::log1p(inv * inv), false};
}

}  // namespace muskat
