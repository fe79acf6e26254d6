#include "clusterfuse/pcen.hpp"

#include <cmath>

#include "clusterfuse/clusterer.hpp"
#include "clusterfuse/crf.hpp"
#include "clusterfuse/gen_ista.hpp"
#include "clusterfuse/model.hpp"

namespace clusterfuse {

PrecisionSet pcen_inner_solve(const ClassDataset& data, const Partition& part,
                              const PenaltyConfig& cfg, const PrecisionSet* warm,
                              bool* converged, int* failed_class) {
  data.validate();
  part.validate();
  cfg.validate(data.num_classes());

  PrecisionSet omegas = warm ? *warm : diagonal_init(data);
  if (converged) *converged = true;
  if (failed_class) *failed_class = -1;

  const auto blocks = part.blocks();
  bool coupled = false;
  for (const auto& block : blocks)
    if (block.size() > 1 && cfg.lambda2 > 0.0) coupled = true;

  GenIstaConfig inner;
  inner.eps = cfg.tol * 1e-2;  // block solves tighter than the sweep tolerance
  inner.max_iter = 10000;

  double prev = coupled ? pcen_objective(data, omegas, part, cfg) : 0.0;
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
        inner.gamma1 = cfg.lambda1 / stats.n;
        inner.gamma2 = cfg.lambda2 * (card - 1.0) / (2.0 * stats.n * card);
        // Singleton clusters degenerate to the L1-only problem; the line
        // search alone enforces definiteness there.
        inner.step_mode = StepMode::backtracking;
        GenIstaResult res = gen_ista_solve(s_tilde, inner, omegas[c]);
        if (!res.converged) {
          if (converged) *converged = false;
          if (failed_class) *failed_class = c;
        }
        omegas[c] = std::move(res.omega);
      }
    }
    if (!coupled) break;
    const double current = pcen_objective(data, omegas, part, cfg);
    if (std::abs(prev - current) <= cfg.tol * (1.0 + std::abs(current))) return omegas;
    prev = current;
    if (cycle == cycles - 1 && converged) *converged = false;
  }
  return omegas;
}

FitResult pcen_fit(const ClassDataset& data, const PenaltyConfig& cfg, std::uint64_t rng_seed) {
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
    fit.report.objective_trace.push_back(pcen_objective(data, fit.omegas, current, cfg));

    bool inner_ok = true;
    int failed = -1;
    fit.omegas = pcen_inner_solve(data, current, cfg, &fit.omegas, &inner_ok, &failed);
    if (!inner_ok) fit.report.failed_class = failed;
    inner_all_ok = inner_all_ok && inner_ok;
    fit.report.objective_trace.push_back(pcen_objective(data, fit.omegas, current, cfg));
    ++fit.report.outer_rounds;
  }
  return fit;
}

}  // namespace clusterfuse
