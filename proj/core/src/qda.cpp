#include "clusterfuse/qda.hpp"

#include <cmath>

#include "clusterfuse/model.hpp"

namespace clusterfuse {

void QdaModel::validate() const {
  if (omegas.empty() || omegas.size() != mus.size() || omegas.size() != log_priors.size())
    throw std::invalid_argument("QdaModel: inconsistent class counts");
  const Eigen::Index p = omegas[0].rows();
  double prior_sum = 0.0;
  for (std::size_t c = 0; c < omegas.size(); ++c) {
    if (omegas[c].rows() != p || omegas[c].cols() != p || mus[c].size() != p)
      throw std::invalid_argument("QdaModel: dimension mismatch");
    prior_sum += std::exp(log_priors[c]);
  }
  if (std::abs(prior_sum - 1.0) > 1e-8)
    throw std::invalid_argument("QdaModel: priors do not sum to 1");
}

std::vector<double> QdaModel::empirical_log_priors(const ClassDataset& data) {
  std::vector<double> out;
  const double total = data.total_n();
  for (const auto& stats : data.classes) out.push_back(std::log(stats.n / total));
  return out;
}

QdaPrediction qda_predict(const QdaModel& model, const Vector& x) {
  if (x.size() != model.omegas[0].rows())
    throw std::invalid_argument("qda_predict: dimension mismatch");
  QdaPrediction pred;
  pred.scores.resize(model.num_classes());
  for (int c = 0; c < model.num_classes(); ++c) {
    const Vector d = x - model.mus[c];
    pred.scores[c] = model.log_priors[c] + 0.5 * logdet_spd(model.omegas[c]) -
                     0.5 * d.dot(model.omegas[c] * d);
    if (pred.scores[c] > pred.scores[pred.label]) pred.label = c;
  }
  return pred;
}

double classification_error(const QdaModel& model, const Matrix& rows,
                            const std::vector<int>& labels) {
  if (rows.rows() != static_cast<Eigen::Index>(labels.size()))
    throw std::invalid_argument("classification_error: label count mismatch");
  if (rows.rows() == 0) return 0.0;
  int wrong = 0;
  for (int i = 0; i < rows.rows(); ++i)
    if (qda_predict(model, rows.row(i).transpose()).label != labels[i]) ++wrong;
  return static_cast<double>(wrong) / static_cast<double>(rows.rows());
}

}  // namespace clusterfuse
