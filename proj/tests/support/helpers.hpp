#pragma once

// Shared test oracles, written independently of the library internals:
// a slow fixed-step reference solver for the elastic-net precision
// subproblem, KKT residuals, set-partition enumeration, and small random
// matrix factories.

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace testsupport {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline Matrix random_symmetric(int p, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, scale);
  Matrix a(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) a(i, j) = gauss(rng);
  return 0.5 * (a + a.transpose());
}

inline Matrix random_spd(int p, std::mt19937_64& rng, double ridge = 0.5) {
  const Matrix a = random_symmetric(p, rng);
  return a * a.transpose() / p + ridge * Matrix::Identity(p, p);
}

inline bool is_pd(const Matrix& a) {
  Eigen::LLT<Matrix> llt(a);
  return llt.info() == Eigen::Success;
}

// f(O) = tr(S O) - logdet O + g1*||O||_1 + g2*||O||_F^2
inline double en_objective(const Matrix& s, const Matrix& omega, double g1, double g2) {
  Eigen::LLT<Matrix> llt(omega);
  if (llt.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
  double logdet = 0.0;
  for (int i = 0; i < omega.rows(); ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
  return (s * omega).trace() - logdet + g1 * omega.cwiseAbs().sum() +
         g2 * omega.squaredNorm();
}

// Max violation of the subgradient optimality conditions of the
// elastic-net subproblem at omega.
inline double en_kkt_residual(const Matrix& s, const Matrix& omega, double g1, double g2,
                              double zero_tol = 1e-10) {
  const Matrix grad = s - omega.inverse() + 2.0 * g2 * omega;
  double worst = 0.0;
  for (int i = 0; i < omega.rows(); ++i) {
    for (int j = 0; j < omega.cols(); ++j) {
      double v;
      if (std::abs(omega(i, j)) > zero_tol)
        v = std::abs(grad(i, j) + g1 * (omega(i, j) > 0 ? 1.0 : -1.0));
      else
        v = std::max(0.0, std::abs(grad(i, j)) - g1);
      worst = std::max(worst, v);
    }
  }
  return worst;
}

inline Matrix soft_threshold_ref(const Matrix& a, double tau) {
  Matrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const double v = std::abs(a(i, j)) - tau;
      out(i, j) = v > 0 ? (a(i, j) > 0 ? v : -v) : 0.0;
    }
  return out;
}

// Slow reference solver: plain proximal iteration with a tiny fixed step,
// run until the objective stops moving. Deliberately naive.
inline Matrix slow_en_solve(const Matrix& s, double g1, double g2, double t = 1e-4,
                            double tol = 1e-7, long max_iter = 4000000) {
  const int p = static_cast<int>(s.rows());
  Matrix omega = Matrix::Identity(p, p);
  // start from a guaranteed-feasible ridge-type point
  {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(s);
    Vector d(p);
    for (int j = 0; j < p; ++j) {
      const double a = eig.eigenvalues()(j);
      d(j) = (-a + std::sqrt(a * a + 8.0 * g2)) / (4.0 * g2);
    }
    if (g2 > 0)
      omega = eig.eigenvectors() * d.asDiagonal() * eig.eigenvectors().transpose();
  }
  double prev = en_objective(s, omega, g1, g2);
  for (long k = 0; k < max_iter; ++k) {
    double step = t;
    Matrix grad = s - omega.inverse() + 2.0 * g2 * omega;
    Matrix cand;
    for (;;) {
      cand = soft_threshold_ref(omega - step * grad, step * g1);
      if (is_pd(cand)) break;
      step *= 0.5;
      if (step < 1e-18) throw std::runtime_error("reference solver lost definiteness");
    }
    const double moved = (cand - omega).norm();
    omega = cand;
    const double cur = en_objective(s, omega, g1, g2);
    if (k > 10 && moved <= tol * step) break;
    prev = cur;
  }
  return omega;
}

// All set partitions of {0..n-1} (restricted growth strings).
inline std::vector<std::vector<int>> all_set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  for (;;) {
    out.push_back(a);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, a[j]);
      if (a[i] <= cap) break;
    }
    if (i == 0) break;
    ++a[i];
    for (int j = i + 1; j < n; ++j) a[j] = 0;
  }
  return out;
}

inline int num_blocks(const std::vector<int>& assignment) {
  int b = 0;
  for (int v : assignment) b = std::max(b, v + 1);
  return b;
}

// WCSS of vectorized matrices under an assignment.
inline double wcss_ref(const std::vector<Matrix>& xs, const std::vector<int>& assignment) {
  const int q = num_blocks(assignment);
  double total = 0.0;
  for (int block = 0; block < q; ++block) {
    Matrix mean = Matrix::Zero(xs[0].rows(), xs[0].cols());
    int card = 0;
    for (std::size_t c = 0; c < xs.size(); ++c)
      if (assignment[c] == block) {
        mean += xs[c];
        ++card;
      }
    if (card == 0) continue;
    mean /= card;
    for (std::size_t c = 0; c < xs.size(); ++c)
      if (assignment[c] == block) total += (xs[c] - mean).squaredNorm();
  }
  return total;
}

inline double pair_sum_ref(const std::vector<Matrix>& xs,
                           const std::vector<int>& assignment) {
  const int q = num_blocks(assignment);
  double total = 0.0;
  for (int block = 0; block < q; ++block) {
    int card = 0;
    for (std::size_t c = 0; c < xs.size(); ++c)
      if (assignment[c] == block) ++card;
    if (card == 0) continue;
    double block_sum = 0.0;
    for (std::size_t c = 0; c < xs.size(); ++c)
      for (std::size_t m = c + 1; m < xs.size(); ++m)
        if (assignment[c] == block && assignment[m] == block)
          block_sum += (xs[c] - xs[m]).squaredNorm();
    total += block_sum / card;
  }
  return total;
}

}  // namespace testsupport
