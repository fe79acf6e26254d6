#pragma once

#include "clusterfuse/types.hpp"

namespace clusterfuse {

struct QdaModel {
  PrecisionSet omegas;
  std::vector<Vector> mus;
  std::vector<double> log_priors;

  int num_classes() const { return static_cast<int>(omegas.size()); }
  void validate() const;

  static std::vector<double> empirical_log_priors(const ClassDataset& data);
};

struct QdaPrediction {
  int label = 0;  // 0-based class index
  std::vector<double> scores;
};

/// argmax_c { log pi_c + 1/2 logdet Omega_c - 1/2 (x-mu_c)' Omega_c (x-mu_c) },
/// ties to the lowest class index.
QdaPrediction qda_predict(const QdaModel& model, const Vector& x);

/// Fraction of rows whose predicted class index differs from the label.
double classification_error(const QdaModel& model, const Matrix& rows,
                            const std::vector<int>& labels);

}  // namespace clusterfuse
