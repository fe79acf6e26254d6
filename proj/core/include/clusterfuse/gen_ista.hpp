#pragma once

#include <optional>

#include "clusterfuse/types.hpp"

namespace clusterfuse {

enum class StepMode { backtracking, fixed_theory };

struct GenIstaConfig {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double eps = 1e-8;          // relative objective-change stop
  double eta_backtrack = 0.5; // step shrink factor, in (0,1)
  double t0 = 1.0;            // initial step each iteration
  int max_iter = 5000;
  StepMode step_mode = StepMode::backtracking;
};

struct GenIstaResult {
  Matrix omega;
  std::vector<double> objective_trace;
  std::vector<double> steps_used;
  int iterations = 0;
  bool converged = false;
};

/// Proximal gradient descent for
///   argmin_{Omega SPD} tr(S~ Omega) - logdet(Omega)
///                      + gamma1*||Omega||_1 + gamma2*||Omega||_F^2.
/// S~ may be indefinite. In backtracking mode the step is found by line
/// search (positive definiteness + majorization acceptance); in
/// fixed_theory mode the step is min(t_w, t_max) and no search runs
/// (requires gamma2 > 0). Default start is diag(1/S~_jj) when the diagonal
/// is positive, else alpha*I.
GenIstaResult gen_ista_solve(const Matrix& s_tilde, const GenIstaConfig& cfg,
                             const std::optional<Matrix>& omega0 = std::nullopt);

/// RHS - LHS of the smooth-part majorization at omega_new around omega_old,
/// the acceptance quantity of the line search. Nonnegative for steps below
/// 1/L; exactly zero when omega_new == omega_old.
double majorizer_gap(const Matrix& omega_new, const Matrix& omega_old,
                     const Matrix& s_tilde, double gamma2, double t);

}  // namespace clusterfuse
