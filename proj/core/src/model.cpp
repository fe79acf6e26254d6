#include "clusterfuse/model.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <map>

namespace clusterfuse {

int ClassDataset::total_n() const {
  int n = 0;
  for (const auto& c : classes) n += c.n;
  return n;
}

void ClassDataset::validate() const {
  if (classes.empty()) throw std::invalid_argument("ClassDataset: no classes");
  if (p <= 0) throw std::invalid_argument("ClassDataset: p must be positive");
  for (const auto& c : classes) {
    if (c.n < 1) throw std::invalid_argument("ClassDataset: n_c must be >= 1");
    if (c.mean.size() != p || c.cov.rows() != p || c.cov.cols() != p)
      throw std::invalid_argument("ClassDataset: dimension mismatch");
    const double scale = std::max(1.0, c.cov.cwiseAbs().maxCoeff());
    if ((c.cov - c.cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw std::invalid_argument("ClassDataset: covariance not symmetric");
  }
}

ClassDataset ClassDataset::from_rows(const Matrix& rows, const std::vector<int>& labels,
                                     std::vector<int>* class_labels_out) {
  if (rows.rows() != static_cast<Eigen::Index>(labels.size()))
    throw std::invalid_argument("from_rows: label count does not match row count");
  if (rows.rows() == 0) throw std::invalid_argument("from_rows: no observations");

  std::map<int, std::vector<int>> by_label;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) by_label[labels[i]].push_back(i);

  ClassDataset data;
  data.p = static_cast<int>(rows.cols());
  if (class_labels_out) class_labels_out->clear();
  for (const auto& [label, idx] : by_label) {
    ClassStats stats;
    stats.n = static_cast<int>(idx.size());
    Matrix x(stats.n, data.p);
    for (int i = 0; i < stats.n; ++i) x.row(i) = rows.row(idx[i]);
    stats.mean = x.colwise().mean();
    Matrix centered = x.rowwise() - stats.mean.transpose();
    stats.cov = (centered.transpose() * centered) / static_cast<double>(stats.n);
    data.classes.push_back(std::move(stats));
    if (class_labels_out) class_labels_out->push_back(label);
  }
  return data;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks);
  for (int c = 0; c < num_items(); ++c) out[assignment[c]].push_back(c);
  return out;
}

void Partition::validate() const {
  if (num_blocks < 1) throw std::invalid_argument("Partition: Q must be >= 1");
  std::vector<int> counts(num_blocks, 0);
  for (int label : assignment) {
    if (label < 0 || label >= num_blocks)
      throw std::invalid_argument("Partition: label out of range");
    ++counts[label];
  }
  for (int count : counts)
    if (count == 0) throw std::invalid_argument("Partition: empty block");
}

bool Partition::equivalent(const Partition& other) const {
  if (num_items() != other.num_items() || num_blocks != other.num_blocks) return false;
  std::map<int, int> fwd, bwd;
  for (int c = 0; c < num_items(); ++c) {
    const int a = assignment[c];
    const int b = other.assignment[c];
    auto [it1, new1] = fwd.emplace(a, b);
    if (!new1 && it1->second != b) return false;
    auto [it2, new2] = bwd.emplace(b, a);
    if (!new2 && it2->second != a) return false;
  }
  return true;
}

void PenaltyConfig::validate(int C) const {
  if (lambda1 <= 0.0) throw std::invalid_argument("PenaltyConfig: lambda1 must be > 0");
  if (lambda2 < 0.0) throw std::invalid_argument("PenaltyConfig: lambda2 must be >= 0");
  if (num_clusters < 1 || num_clusters > C)
    throw std::invalid_argument("PenaltyConfig: Q must satisfy 1 <= Q <= C");
  if (tol <= 0.0 || max_iter < 1 || n_starts < 1)
    throw std::invalid_argument("PenaltyConfig: invalid tolerances");
}

double logdet_spd(const Matrix& a) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("logdet_spd: matrix is not positive definite");
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

double neg2_loglik(const ClassDataset& data, const PrecisionSet& omegas) {
  if (static_cast<int>(omegas.size()) != data.num_classes())
    throw std::invalid_argument("neg2_loglik: class count mismatch");
  double total = 0.0;
  for (int c = 0; c < data.num_classes(); ++c) {
    const auto& stats = data.classes[c];
    if (omegas[c].rows() != data.p || omegas[c].cols() != data.p)
      throw std::invalid_argument("neg2_loglik: dimension mismatch");
    total += stats.n * ((stats.cov * omegas[c]).trace() - logdet_spd(omegas[c]));
  }
  return total;
}

double fusion_penalty(const PrecisionSet& omegas, const Partition& part, double lambda2) {
  part.validate();
  if (part.num_items() != static_cast<int>(omegas.size()))
    throw std::invalid_argument("fusion_penalty: partition size mismatch");
  double total = 0.0;
  for (const auto& block : part.blocks()) {
    double pair_sum = 0.0;
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        pair_sum += (omegas[block[i]] - omegas[block[j]]).squaredNorm();
    total += pair_sum / static_cast<double>(block.size());
  }
  return 0.5 * lambda2 * total;
}

double crf_objective(const ClassDataset& data, const PrecisionSet& omegas,
                     const Partition& part, const PenaltyConfig& cfg) {
  double ridge = 0.0;
  for (const auto& omega : omegas) ridge += omega.squaredNorm();
  return neg2_loglik(data, omegas) + 0.5 * cfg.lambda1 * ridge +
         fusion_penalty(omegas, part, cfg.lambda2);
}

double pcen_objective(const ClassDataset& data, const PrecisionSet& omegas,
                      const Partition& part, const PenaltyConfig& cfg) {
  double l1 = 0.0;
  for (const auto& omega : omegas) l1 += omega.cwiseAbs().sum();
  return neg2_loglik(data, omegas) + cfg.lambda1 * l1 +
         fusion_penalty(omegas, part, cfg.lambda2);
}

long metric_stp(const PrecisionSet& truth, const PrecisionSet& est, double zero_tol) {
  if (truth.size() != est.size()) throw std::invalid_argument("metric_stp: size mismatch");
  long count = 0;
  for (std::size_t c = 0; c < truth.size(); ++c) {
    if (truth[c].rows() != est[c].rows() || truth[c].cols() != est[c].cols())
      throw std::invalid_argument("metric_stp: shape mismatch");
    count += ((truth[c].cwiseAbs().array() > zero_tol) && (est[c].cwiseAbs().array() > zero_tol))
                 .count();
  }
  return count;
}

double metric_tpr(const PrecisionSet& truth, const PrecisionSet& est, double zero_tol) {
  long positives = 0;
  for (const auto& omega : truth)
    positives += (omega.cwiseAbs().array() > zero_tol).count();
  if (positives == 0) return 0.0;
  return static_cast<double>(metric_stp(truth, est, zero_tol)) /
         static_cast<double>(positives);
}

double metric_frob_error(const PrecisionSet& truth, const PrecisionSet& est) {
  if (truth.size() != est.size())
    throw std::invalid_argument("metric_frob_error: size mismatch");
  double total = 0.0;
  for (std::size_t c = 0; c < truth.size(); ++c) total += (truth[c] - est[c]).squaredNorm();
  return total;
}

}  // namespace clusterfuse
