#pragma once

#include <cstdint>

#include "clusterfuse/types.hpp"

namespace clusterfuse {

/// Fixed-partition ridge-fusion update: cyclic blockwise coordinate
/// descent within each cluster, each block a closed-form ridge precision
/// solve. Warm-started from `warm` when given.
PrecisionSet crf_inner_solve(const ClassDataset& data, const Partition& part,
                             const PenaltyConfig& cfg, const PrecisionSet* warm = nullptr,
                             bool* converged = nullptr);

/// The CRF estimator: alternate k-means on the vectorized estimates with
/// the ridge-fusion update until the partition repeats.
FitResult crf_fit(const ClassDataset& data, const PenaltyConfig& cfg, std::uint64_t rng_seed);

/// Diagonal initializer shared by CRF and PCEN: diag(1/S_c_jj).
/// Throws std::invalid_argument on a zero diagonal.
PrecisionSet diagonal_init(const ClassDataset& data);

}  // namespace clusterfuse
