#include "clusterfuse/operators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace clusterfuse {

Matrix soft_threshold(const Matrix& a, double tau) {
  if (tau < 0.0) throw std::invalid_argument("soft_threshold: tau must be >= 0");
  return a.unaryExpr([tau](double v) {
    const double mag = std::abs(v) - tau;
    return mag > 0.0 ? (v > 0.0 ? mag : -mag) : 0.0;
  });
}

double ridge_eig(double a, double eta) {
  if (eta <= 0.0) throw std::domain_error("ridge_eig: eta must be > 0");
  return (-a + std::sqrt(a * a + 8.0 * eta)) / (4.0 * eta);
}

Matrix ridge_precision_solve(const Matrix& a, double eta) {
  if (eta <= 0.0) throw std::domain_error("ridge_precision_solve: eta must be > 0");
  if (a.rows() != a.cols())
    throw std::invalid_argument("ridge_precision_solve: matrix not square");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetrize(a));
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("ridge_precision_solve: eigendecomposition failed");
  Vector mapped = eig.eigenvalues().unaryExpr([eta](double d) { return ridge_eig(d, eta); });
  return eig.eigenvectors() * mapped.asDiagonal() * eig.eigenvectors().transpose();
}

std::pair<double, double> solution_bounds(const Matrix& s_tilde, double gamma1,
                                          double gamma2, int p) {
  if (gamma1 <= 0.0 || gamma2 <= 0.0)
    throw std::domain_error("solution_bounds: gamma1, gamma2 must be > 0");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetrize(s_tilde),
                                            Eigen::EigenvaluesOnly);
  const double rho1 = eig.eigenvalues().maxCoeff();
  const double rhop = eig.eigenvalues().minCoeff();
  const double hi = rho1 + gamma1 * p;
  const double lo = rhop - gamma1 * p;
  const double alpha = 1.0 / (0.5 * (hi + std::sqrt(hi * hi + 8.0 * gamma2)));
  const double beta = 1.0 / (0.5 * (lo + std::sqrt(lo * lo + 8.0 * gamma2)));
  return {alpha, beta};
}

double lipschitz_constant(double alpha, double gamma2, int p) {
  return std::sqrt(static_cast<double>(p)) * (1.0 / (alpha * alpha) + 2.0 * gamma2);
}

SpectralBounds step_bounds(double alpha, double beta, double gamma2, int p) {
  SpectralBounds out;
  out.alpha = alpha;
  out.beta = beta;
  out.b_prime = beta + std::sqrt(static_cast<double>(p)) * (beta - alpha);
  out.t_max = alpha * alpha / (2.0 * alpha * alpha * gamma2 + 1.0);
  const double inv_a2 = 1.0 / (alpha * alpha);
  const double inv_b2 = 1.0 / (out.b_prime * out.b_prime);
  out.t_w = 2.0 / (4.0 * gamma2 + inv_b2 + inv_a2);
  out.delta = 1.0 - 2.0 / (1.0 + (2.0 * gamma2 + inv_a2) / (2.0 * gamma2 + inv_b2));
  out.lipschitz = lipschitz_constant(alpha, gamma2, p);
  return out;
}

SpectralBounds compute_bounds(const Matrix& s_tilde, double gamma1, double gamma2) {
  const int p = static_cast<int>(s_tilde.rows());
  auto [alpha, beta] = solution_bounds(s_tilde, gamma1, gamma2, p);
  return step_bounds(alpha, beta, gamma2, p);
}

}  // namespace clusterfuse
