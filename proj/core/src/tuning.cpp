#include "clusterfuse/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "clusterfuse/crf.hpp"
#include "clusterfuse/model.hpp"
#include "clusterfuse/pcen.hpp"

namespace clusterfuse {

Method method_from_string(const std::string& name) {
  if (name == "crf") return Method::crf;
  if (name == "pcen") return Method::pcen;
  throw std::invalid_argument("unknown method: " + name);
}

double validation_loglik(const PrecisionSet& omegas, const ClassDataset& holdout) {
  if (static_cast<int>(omegas.size()) != holdout.num_classes())
    throw std::invalid_argument("validation_loglik: class count mismatch");
  double total = 0.0;
  for (int c = 0; c < holdout.num_classes(); ++c) {
    const auto& stats = holdout.classes[c];
    if (stats.n == 0) continue;  // class missing from the holdout fold
    total += stats.n * ((stats.cov * omegas[c]).trace() - logdet_spd(omegas[c]));
  }
  return -0.5 * total;
}

ClassDataset holdout_stats(const Matrix& rows, const std::vector<int>& labels,
                           const std::vector<int>& class_labels, const ClassDataset& train) {
  ClassDataset holdout;
  holdout.p = train.p;
  std::map<int, int> class_index;
  for (int c = 0; c < static_cast<int>(class_labels.size()); ++c)
    class_index[class_labels[c]] = c;

  holdout.classes.resize(train.num_classes());
  for (int c = 0; c < train.num_classes(); ++c) {
    holdout.classes[c].n = 0;
    holdout.classes[c].mean = train.classes[c].mean;  // centered at training means
    holdout.classes[c].cov = Matrix::Zero(train.p, train.p);
  }
  for (int i = 0; i < rows.rows(); ++i) {
    const auto it = class_index.find(labels[i]);
    if (it == class_index.end())
      throw std::invalid_argument("holdout_stats: unknown class label");
    auto& stats = holdout.classes[it->second];
    const Vector centered = rows.row(i).transpose() - stats.mean;
    stats.cov += centered * centered.transpose();
    ++stats.n;
  }
  for (auto& stats : holdout.classes)
    if (stats.n > 0) stats.cov /= static_cast<double>(stats.n);
  return holdout;
}

std::vector<int> stratified_folds(const std::vector<int>& labels, int folds,
                                  std::uint64_t rng_seed) {
  if (folds < 2) throw std::invalid_argument("stratified_folds: need folds >= 2");
  std::map<int, std::vector<int>> by_label;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) by_label[labels[i]].push_back(i);

  std::vector<int> fold(labels.size(), 0);
  std::mt19937_64 rng(rng_seed);
  for (auto& [label, idx] : by_label) {
    if (static_cast<int>(idx.size()) < folds)
      throw std::invalid_argument("stratified_folds: a class has fewer rows than folds");
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < static_cast<int>(idx.size()); ++i) fold[idx[i]] = i % folds;
  }
  return fold;
}

CvResult cv_select(const Matrix& rows, const std::vector<int>& labels,
                   const TuningGrid& grid, Method method, const PenaltyConfig& base_cfg) {
  if (grid.lambda1_values.empty() || grid.lambda2_values.empty() || grid.q_values.empty())
    throw std::invalid_argument("cv_select: empty grid");
  const std::vector<int> fold = stratified_folds(labels, grid.folds, grid.rng_seed);

  CvResult result;
  result.best_score = -std::numeric_limits<double>::infinity();

  std::vector<double> lambda1s = grid.lambda1_values;
  std::vector<double> lambda2s = grid.lambda2_values;
  std::vector<int> qs = grid.q_values;
  std::sort(lambda1s.begin(), lambda1s.end());
  std::sort(lambda2s.begin(), lambda2s.end());
  std::sort(qs.begin(), qs.end());

  for (double lambda1 : lambda1s) {
    for (double lambda2 : lambda2s) {
      for (int q : qs) {
        PenaltyConfig cfg = base_cfg;
        cfg.lambda1 = lambda1;
        cfg.lambda2 = lambda2;
        cfg.num_clusters = q;

        ScoreRow row{lambda1, lambda2, q, 0.0, false};
        double score_sum = 0.0;
        try {
          for (int k = 0; k < grid.folds; ++k) {
            std::vector<int> train_idx, val_idx;
            for (int i = 0; i < static_cast<int>(labels.size()); ++i)
              (fold[i] == k ? val_idx : train_idx).push_back(i);

            Matrix train_rows(train_idx.size(), rows.cols());
            std::vector<int> train_labels(train_idx.size());
            for (std::size_t i = 0; i < train_idx.size(); ++i) {
              train_rows.row(i) = rows.row(train_idx[i]);
              train_labels[i] = labels[train_idx[i]];
            }
            Matrix val_rows(val_idx.size(), rows.cols());
            std::vector<int> val_labels(val_idx.size());
            for (std::size_t i = 0; i < val_idx.size(); ++i) {
              val_rows.row(i) = rows.row(val_idx[i]);
              val_labels[i] = labels[val_idx[i]];
            }

            std::vector<int> class_labels;
            const ClassDataset train = ClassDataset::from_rows(train_rows, train_labels,
                                                               &class_labels);
            const FitResult fit = method == Method::crf
                                      ? crf_fit(train, cfg, grid.rng_seed)
                                      : pcen_fit(train, cfg, grid.rng_seed);
            const ClassDataset val = holdout_stats(val_rows, val_labels, class_labels, train);
            score_sum += validation_loglik(fit.omegas, val);
          }
          row.score = score_sum / grid.folds;
        } catch (const std::exception&) {
          row.failed = true;
          row.score = -std::numeric_limits<double>::infinity();
        }
        result.table.push_back(row);
        if (!row.failed && row.score > result.best_score) {
          result.best_score = row.score;
          result.best = cfg;
        }
      }
    }
  }
  if (!std::isfinite(result.best_score))
    throw std::runtime_error("cv_select: every grid point failed");
  return result;
}

}  // namespace clusterfuse
