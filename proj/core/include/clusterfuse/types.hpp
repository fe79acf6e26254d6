#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace clusterfuse {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// The symmetric positive definite precision estimates Omega_1..Omega_C.
using PrecisionSet = std::vector<Matrix>;

/// Per-class sufficient statistics: sample size, mean, and sample
/// covariance with 1/n normalization.
struct ClassStats {
  int n = 0;
  Vector mean;
  Matrix cov;
};

struct ClassDataset {
  int p = 0;
  std::vector<ClassStats> classes;

  int num_classes() const { return static_cast<int>(classes.size()); }
  int total_n() const;

  void validate() const;

  /// Builds per-class statistics from labeled rows. Labels are arbitrary
  /// integers; classes are ordered by ascending label. Covariances use the
  /// 1/n_c normalization.
  static ClassDataset from_rows(const Matrix& rows, const std::vector<int>& labels,
                                std::vector<int>* class_labels_out = nullptr);
};

/// A Q-block partition of the class indices {0..C-1}. Labels are 0-based.
struct Partition {
  std::vector<int> assignment;
  int num_blocks = 0;

  int num_items() const { return static_cast<int>(assignment.size()); }
  std::vector<std::vector<int>> blocks() const;
  void validate() const;

  /// Equality up to relabeling of the blocks.
  bool equivalent(const Partition& other) const;

  static Partition single_block(int C) {
    Partition part;
    part.assignment.assign(C, 0);
    part.num_blocks = 1;
    return part;
  }
};

struct PenaltyConfig {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  int num_clusters = 1;
  double tol = 1e-7;
  int max_iter = 100;
  int n_starts = 100;

  void validate(int C) const;
};

/// Diagnostics accumulated along an alternating fit.
struct SolverReport {
  std::vector<double> objective_trace;
  std::vector<Partition> partition_history;
  int outer_rounds = 0;
  bool converged = false;
  int failed_class = -1;
};

struct FitResult {
  PrecisionSet omegas;
  Partition partition;
  SolverReport report;
};

}  // namespace clusterfuse
