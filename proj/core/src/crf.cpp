#include "clusterfuse/crf.hpp"

#include <cmath>

#include "clusterfuse/clusterer.hpp"
#include "clusterfuse/model.hpp"
#include "clusterfuse/operators.hpp"

namespace clusterfuse {

PrecisionSet diagonal_init(const ClassDataset& data) {
  PrecisionSet omegas;
  omegas.reserve(data.num_classes());
  for (const auto& stats : data.classes) {
    if ((stats.cov.diagonal().array() <= 0.0).any())
      throw std::invalid_argument(
          "diagonal initialization requires strictly positive sample variances "
          "in every class");
    omegas.push_back(stats.cov.diagonal().cwiseInverse().asDiagonal());
  }
  return omegas;
}

PrecisionSet crf_inner_solve(const ClassDataset& data, const Partition& part,
                             const PenaltyConfig& cfg, const PrecisionSet* warm,
                             bool* converged) {
  data.validate();
  part.validate();
  cfg.validate(data.num_classes());

  PrecisionSet omegas = warm ? *warm : diagonal_init(data);
  if (converged) *converged = true;

  const auto blocks = part.blocks();
  // With no fusion coupling the problem separates; one sweep is exact.
  bool coupled = false;
  for (const auto& block : blocks)
    if (block.size() > 1 && cfg.lambda2 > 0.0) coupled = true;

  double prev = coupled ? crf_objective(data, omegas, part, cfg) : 0.0;
  const int cycles = coupled ? cfg.max_iter : 1;
  for (int cycle = 0; cycle < cycles; ++cycle) {
    for (const auto& block : blocks) {
      const double card = static_cast<double>(block.size());
      for (int c : block) {
        const auto& stats = data.classes[c];
        Matrix shift = Matrix::Zero(data.p, data.p);
        for (int m : block)
          if (m != c) shift += omegas[m];
        const Matrix s_tilde =
            stats.cov - (cfg.lambda2 / (stats.n * card)) * shift;
        const double eta =
            (cfg.lambda1 + cfg.lambda2 * (card - 1.0) / card) / (2.0 * stats.n);
        omegas[c] = ridge_precision_solve(s_tilde, eta);
      }
    }
    if (!coupled) break;
    const double current = crf_objective(data, omegas, part, cfg);
    if (std::abs(prev - current) <= cfg.tol * (1.0 + std::abs(current))) {
      if (converged) *converged = true;
      return omegas;
    }
    prev = current;
    if (cycle == cycles - 1 && converged) *converged = false;
  }
  return omegas;
}

FitResult crf_fit(const ClassDataset& data, const PenaltyConfig& cfg, std::uint64_t rng_seed) {
  data.validate();
  cfg.validate(data.num_classes());

  FitResult fit;
  fit.omegas = diagonal_init(data);
  fit.report.converged = false;

  Partition current;
  bool have_partition = false;
  bool inner_all_ok = true;
  for (int round = 0; round < cfg.max_iter; ++round) {
    KmeansResult km = kmeans_partition(fit.omegas, cfg.num_clusters, cfg.n_starts, rng_seed);
    Partition next = km.partition;
    // Keep the incumbent partition when multi-start k-means fails to beat
    // it; descent of the full objective requires it.
    if (have_partition &&
        partition_objective(fit.omegas, current) <= partition_objective(fit.omegas, next))
      next = current;

    if (have_partition && next.equivalent(current)) {
      fit.report.converged = inner_all_ok;
      break;
    }
    current = next;
    have_partition = true;
    fit.partition = current;
    fit.report.partition_history.push_back(current);
    fit.report.objective_trace.push_back(crf_objective(data, fit.omegas, current, cfg));

    bool inner_ok = true;
    fit.omegas = crf_inner_solve(data, current, cfg, &fit.omegas, &inner_ok);
    inner_all_ok = inner_all_ok && inner_ok;
    fit.report.objective_trace.push_back(crf_objective(data, fit.omegas, current, cfg));
    ++fit.report.outer_rounds;
  }
  return fit;
}

}  // namespace clusterfuse
