#pragma once

#include "clusterfuse/types.hpp"

namespace clusterfuse {

/// Closed-form quantities governing the elastic-net precision subproblem:
/// eigenvalue bounds on the solution, the Lipschitz constant of the smooth
/// gradient, admissible and worst-case-optimal fixed steps, and the linear
/// contraction rate.
struct SpectralBounds {
  double alpha = 0.0;      // lower eigenvalue bound of the solution
  double beta = 0.0;       // upper eigenvalue bound of the solution
  double b_prime = 0.0;    // upper bound on all fixed-step iterates
  double t_max = 0.0;      // largest admissible fixed step
  double t_w = 0.0;        // optimal worst-case step
  double delta = 0.0;      // contraction rate, in (0,1)
  double lipschitz = 0.0;
};

/// Elementwise soft thresholding, sign(a) * max(|a| - tau, 0).
Matrix soft_threshold(const Matrix& a, double tau);

/// Unique positive minimizer of a*w - log(w) + eta*w^2, i.e. the positive
/// root of 2*eta*w^2 + a*w - 1 = 0.
double ridge_eig(double a, double eta);

/// Solves argmin_{Theta SPD} tr(A Theta) - logdet(Theta) + eta*||Theta||_F^2
/// by mapping the eigenvalues of A through ridge_eig. A may be indefinite.
Matrix ridge_precision_solve(const Matrix& a, double eta);

/// Eigenvalue bounds [alpha, beta] containing the subproblem solution.
std::pair<double, double> solution_bounds(const Matrix& s_tilde, double gamma1,
                                          double gamma2, int p);

/// sqrt(p) * (1/alpha^2 + 2*gamma2).
double lipschitz_constant(double alpha, double gamma2, int p);

/// Fixed-step quantities derived from (alpha, beta): t_max, t_w, b_prime,
/// delta. Fills every field of SpectralBounds.
SpectralBounds step_bounds(double alpha, double beta, double gamma2, int p);

/// Convenience: solution_bounds followed by step_bounds for a subproblem
/// instance.
SpectralBounds compute_bounds(const Matrix& s_tilde, double gamma1, double gamma2);

/// (A + A^T)/2.
inline Matrix symmetrize(const Matrix& a) { return 0.5 * (a + a.transpose()); }

}  // namespace clusterfuse
