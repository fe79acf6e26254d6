#pragma once

#include <cstdint>

#include "clusterfuse/types.hpp"

namespace clusterfuse {

struct KmeansResult {
  Partition partition;
  double wcss = 0.0;
  int start_index = 0;
};

/// Multi-start Lloyd's algorithm on the C vectorized precision matrices
/// with k-means++ seeding. Deterministic given rng_seed (each restart owns
/// a stream derived from (rng_seed, start_index)); ties across restarts go
/// to the lowest start index. Never returns an empty block.
KmeansResult kmeans_partition(const PrecisionSet& omegas, int Q, int n_starts,
                              std::uint64_t rng_seed);

/// The partition subproblem objective,
/// sum_q card(D_q)^-1 sum_{c<m in D_q} ||Omega_c - Omega_m||_F^2,
/// equal to the WCSS of the induced k-means problem.
double partition_objective(const PrecisionSet& omegas, const Partition& part);

}  // namespace clusterfuse
