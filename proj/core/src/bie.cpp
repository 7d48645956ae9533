#include "muskat/bie.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>
#include <string>

namespace muskat {

namespace {

constexpr std::size_t kDenseSolveCap = 1024;
constexpr int kGmresMaxIter = 200;

Eigen::VectorXd to_eigen(const GridFunction& u) {
  return Eigen::Map<const Eigen::VectorXd>(u.values.data(),
                                           static_cast<Eigen::Index>(u.size()));
}

GridFunction from_eigen(const PeriodicGrid& g, const Eigen::VectorXd& v) {
  return GridFunction(g, std::vector<double>(v.data(), v.data() + v.size()));
}

void project_mean(Eigen::VectorXd& v) {
  v.array() -= v.mean();
}

/// Restart-free GMRES with mean-zero projection of iterates, absolute l2
/// residual tolerance. Returns (solution, residual, iterations).
struct GmresResult {
  Eigen::VectorXd x;
  double residual;
  int iterations;
};

GmresResult gmres_zero_mean(const Eigen::MatrixXd& M, const Eigen::VectorXd& b, double tol) {
  const Eigen::Index n = b.size();
  const int maxit = std::min<int>(kGmresMaxIter, static_cast<int>(n));
  Eigen::MatrixXd V(n, maxit + 1);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(maxit + 1, maxit);
  Eigen::VectorXd cs(maxit), sn(maxit), g = Eigen::VectorXd::Zero(maxit + 1);

  Eigen::VectorXd r = b;  // x0 = 0
  double beta = r.norm();
  if (beta <= tol) return {Eigen::VectorXd::Zero(n), beta, 0};
  V.col(0) = r / beta;
  g(0) = beta;

  int k = 0;
  double res = beta;
  for (; k < maxit; ++k) {
    Eigen::VectorXd w = M * V.col(k);
    project_mean(w);
    for (int i = 0; i <= k; ++i) {
      H(i, k) = w.dot(V.col(i));
      w -= H(i, k) * V.col(i);
    }
    H(k + 1, k) = w.norm();
    if (H(k + 1, k) > 1e-14 * beta) V.col(k + 1) = w / H(k + 1, k);
    // Givens rotations
    for (int i = 0; i < k; ++i) {
      const double t = cs(i) * H(i, k) + sn(i) * H(i + 1, k);
      H(i + 1, k) = -sn(i) * H(i, k) + cs(i) * H(i + 1, k);
      H(i, k) = t;
    }
    const double denom = std::hypot(H(k, k), H(k + 1, k));
    cs(k) = H(k, k) / denom;
    sn(k) = H(k + 1, k) / denom;
    H(k, k) = denom;
    H(k + 1, k) = 0.0;
    g(k + 1) = -sn(k) * g(k);
    g(k) = cs(k) * g(k);
    res = std::abs(g(k + 1));
    if (res <= tol || H(k + 1, k) == 0.0) {
      ++k;
      break;
    }
  }
  Eigen::VectorXd y = H.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
  Eigen::VectorXd x = V.leftCols(k) * y;
  project_mean(x);
  return {x, res, k};
}

/// Cheap smallest-singular-value estimate via inverse iteration on M^T M
/// reusing an LU factorization of M.
double sigma_min_estimate_lu(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu,
                             const Eigen::MatrixXd& M) {
  Eigen::VectorXd v = Eigen::VectorXd::Ones(M.rows());
  v(0) += 0.5;  // break symmetry
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < 8; ++it) {
    Eigen::VectorXd w = lu.solve(v);
    w = lu.transpose().solve(w);
    const double nw = w.norm();
    if (nw == 0.0) break;
    v = w / nw;
    sigma = 1.0 / std::sqrt(nw);
  }
  return sigma;
}

}  // namespace

KernelMatrix assemble(const GridFunction& f, OperatorTag tag) {
  f.check_finite();
  const std::size_t n = f.size();
  const double dx = f.grid.spacing();
  ProfileSamples p(f);
  Eigen::MatrixXd A(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const KernelSample s = (tag == OperatorTag::kKStar) ? kstar_integrand(p, i, j)
                                                          : k_integrand(p, i, j);
      if (!std::isfinite(s.value)) {
        throw std::runtime_error("assemble: non-finite kernel value at (" + std::to_string(i) +
                                 ", " + std::to_string(j) + ")");
      }
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s.value * dx;
    }
  }
  return {std::move(A), f.grid, tag, dx};
}

DensitySolution solve_theta(const GridFunction& f, const GridFunction& rhs, double tol) {
  const std::size_t n = f.size();
  Eigen::VectorXd b = to_eigen(rhs);
  const double scale = std::max(1.0, b.norm());
  if (std::abs(b.mean()) > 1e-10 * scale) {
    throw std::invalid_argument("solve_theta: rhs must have zero mean (is it a derivative?)");
  }
  project_mean(b);

  KernelMatrix km = assemble(f, OperatorTag::kKStar);
  Eigen::MatrixXd M = 0.5 * Eigen::MatrixXd::Identity(km.entries.rows(), km.entries.cols()) -
                      km.entries;

  DensitySolution out{GridFunction(f.grid), 0.0, 0.0, 0};
  Eigen::VectorXd theta;
  if (n <= kDenseSolveCap) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
    theta = lu.solve(b);
    project_mean(theta);
    out.residual_norm = (M * theta - b).norm();
    out.sigma_min_estimate = sigma_min_estimate_lu(lu, M);
    out.iterations = 1;
  } else {
    GmresResult r = gmres_zero_mean(M, b, tol);
    theta = r.x;
    out.residual_norm = (M * theta - b).norm();
    out.iterations = r.iterations;
    out.sigma_min_estimate = 0.0;  // not tracked on the Krylov path
    if (out.residual_norm > std::max(tol, 1e-9 * scale)) {
      throw std::runtime_error("solve_theta: GMRES stalled, best residual " +
                               std::to_string(out.residual_norm));
    }
  }
  if (out.residual_norm > std::max(tol, 1e-10 * scale)) {
    throw std::runtime_error("solve_theta: residual " + std::to_string(out.residual_norm) +
                             " above tolerance");
  }
  out.theta = from_eigen(f.grid, theta);
  return out;
}

GridFunction solve_Theta(const GridFunction& f, const GridFunction& g, double tol) {
  KernelMatrix km = assemble(f, OperatorTag::kK);
  Eigen::MatrixXd M = 0.5 * Eigen::MatrixXd::Identity(km.entries.rows(), km.entries.cols()) +
                      km.entries;
  Eigen::VectorXd b = to_eigen(g);
  Eigen::VectorXd x = M.partialPivLu().solve(b);
  const double res = (M * x - b).norm();
  if (res > std::max(tol, 1e-10 * std::max(1.0, b.norm()))) {
    throw std::runtime_error("solve_Theta: residual above tolerance");
  }
  return from_eigen(f.grid, x);
}

double sigma_min_monitor(const GridFunction& f, std::size_t cap) {
  const std::size_t n = f.size();
  if (n > cap) {
    throw std::invalid_argument("sigma_min_monitor: grid size " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  }
  KernelMatrix km = assemble(f, OperatorTag::kKStar);
  const Eigen::Index ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd M = 0.5 * Eigen::MatrixXd::Identity(ni, ni) - km.entries;

  // Orthonormal basis of the zero-mean subspace.
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(ni, ni - 1);
  for (Eigen::Index j = 0; j < ni - 1; ++j) {
    B(j, j) = 1.0;
    B(ni - 1, j) = -1.0;
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(B);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(ni, ni - 1);

  Eigen::MatrixXd R = Q.transpose() * M * Q;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(R);
  return svd.singularValues().tail(1)(0);
}

}  // namespace muskat
