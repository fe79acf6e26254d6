#pragma once

#include <string>
#include <vector>

#include "clusterfuse/qda.hpp"
#include "clusterfuse/tuning.hpp"
#include "clusterfuse/types.hpp"

namespace clusterfuse::io {

/// Labeled observation table read from CSV.
struct LabeledRows {
  Matrix rows;              // feature columns only
  std::vector<int> labels;  // empty when the file carries no label column
};

/// Reads a CSV of observations, one per row. label_col is 0-based;
/// -1 means the last column; -2 means no label column.
LabeledRows read_csv(const std::string& path, int label_col, bool has_header);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double v);

/// A fitted model plus everything needed to classify: per-class precision
/// matrices, means, priors, the fitted partition, and provenance.
struct ModelFile {
  int schema_version = 1;
  int p = 0;
  std::vector<int> class_labels;
  std::string method;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  int q = 1;
  Partition partition;
  std::vector<double> log_priors;
  std::vector<Vector> mus;
  PrecisionSet omegas;
  bool converged = true;
  int outer_rounds = 0;
  std::vector<double> objective_trace;
};

void write_model(const std::string& path, const ModelFile& model);
ModelFile read_model(const std::string& path);

/// Grid JSON: {"lambda1": [...], "lambda2": [...], "q": [...]}.
TuningGrid read_grid(const std::string& path);

/// Tidy results CSV writer: header then rows, all doubles at 17 digits.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace clusterfuse::io
