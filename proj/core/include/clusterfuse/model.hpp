#pragma once

#include "clusterfuse/types.hpp"

namespace clusterfuse {

/// log det of a symmetric positive definite matrix via Cholesky.
/// Throws std::domain_error if the matrix is not positive definite.
double logdet_spd(const Matrix& a);

/// Profiled negative two times the log-likelihood,
/// sum_c n_c { tr(S_c Omega_c) - logdet(Omega_c) }.
double neg2_loglik(const ClassDataset& data, const PrecisionSet& omegas);

/// Cluster fusion penalty
/// (lambda2/2) sum_q card(D_q)^-1 sum_{c<m in D_q} ||Omega_c - Omega_m||_F^2,
/// with each unordered pair counted once.
double fusion_penalty(const PrecisionSet& omegas, const Partition& part, double lambda2);

double crf_objective(const ClassDataset& data, const PrecisionSet& omegas,
                     const Partition& part, const PenaltyConfig& cfg);

double pcen_objective(const ClassDataset& data, const PrecisionSet& omegas,
                      const Partition& part, const PenaltyConfig& cfg);

/// Sum of true positives across classes: entries nonzero in both the true
/// and estimated matrices, diagonal included. An entry is treated as zero
/// iff its magnitude is <= zero_tol.
long metric_stp(const PrecisionSet& truth, const PrecisionSet& est, double zero_tol = 1e-8);

/// True positive rate: STP divided by the number of nonzero entries of truth.
double metric_tpr(const PrecisionSet& truth, const PrecisionSet& est, double zero_tol = 1e-8);

/// sum_c ||Omega*_c - Omegahat_c||_F^2.
double metric_frob_error(const PrecisionSet& truth, const PrecisionSet& est);

}  // namespace clusterfuse
