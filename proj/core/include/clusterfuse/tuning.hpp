#pragma once

#include <cstdint>
#include <string>

#include "clusterfuse/types.hpp"

namespace clusterfuse {

struct TuningGrid {
  std::vector<double> lambda1_values;
  std::vector<double> lambda2_values;
  std::vector<int> q_values;
  int folds = 5;
  std::uint64_t rng_seed = 0;
};

enum class Method { crf, pcen };
Method method_from_string(const std::string& name);

struct ScoreRow {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  int q = 1;
  double score = 0.0;
  bool failed = false;
};

struct CvResult {
  PenaltyConfig best;
  double best_score = 0.0;
  std::vector<ScoreRow> table;
};

/// Held-out Gaussian log-likelihood up to constants,
/// -1/2 sum_c n_c^(v) { tr(S_c^(v) Omega_c) - logdet Omega_c }, where the
/// validation covariance is centered at the training-fold means.
double validation_loglik(const PrecisionSet& omegas, const ClassDataset& holdout);

/// Validation-fold statistics for the rows in `rows`, centered at the
/// training means carried by `train`. Classes missing from the holdout get
/// n = 0 and contribute nothing to validation_loglik.
ClassDataset holdout_stats(const Matrix& rows, const std::vector<int>& labels,
                           const std::vector<int>& class_labels, const ClassDataset& train);

/// Stratified fold labels in {0..folds-1}, split as evenly as possible per
/// class; deterministic given the seed.
std::vector<int> stratified_folds(const std::vector<int>& labels, int folds,
                                  std::uint64_t rng_seed);

/// K-fold cross-validation over the grid, maximizing the mean validation
/// likelihood. Grid order and tie-breaking are lexicographic in
/// (lambda1, lambda2, Q); a failed fit scores -inf and never aborts the
/// sweep.
CvResult cv_select(const Matrix& rows, const std::vector<int>& labels,
                   const TuningGrid& grid, Method method,
                   const PenaltyConfig& base_cfg = {});

}  // namespace clusterfuse
