#pragma once

#include <cstdint>

#include "clusterfuse/types.hpp"

namespace clusterfuse {

/// Fixed-partition sparse update: per cluster, cycle over member classes
/// solving the elastic-net precision subproblem with gen_ista (gamma_c1 =
/// lambda1/n_c, gamma_c2 = lambda2*(card-1)/(2*n_c*card), shifted S~_c).
/// Singleton clusters degenerate to an L1-only solve in backtracking mode.
PrecisionSet pcen_inner_solve(const ClassDataset& data, const Partition& part,
                              const PenaltyConfig& cfg, const PrecisionSet* warm = nullptr,
                              bool* converged = nullptr, int* failed_class = nullptr);

/// The PCEN estimator: alternate k-means with the sparse blockwise update
/// until the partition repeats.
FitResult pcen_fit(const ClassDataset& data, const PenaltyConfig& cfg, std::uint64_t rng_seed);

}  // namespace clusterfuse
