#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "clusterfuse/types.hpp"

namespace clusterfuse {

using Rng = std::mt19937_64;

enum class ScenarioName { block_er, blockdiag_er, blockdiag_identity, qda_dense };

ScenarioName scenario_from_string(const std::string& name);
std::string to_string(ScenarioName name);

struct Scenario {
  ScenarioName name = ScenarioName::block_er;
  int p = 20;
  int n_per_class = 200;
  double rho = 0.45;  // qda_dense only
  std::uint64_t rng_seed = 0;
};

struct GroundTruth {
  PrecisionSet omegas_true;
  std::vector<Vector> mus_true;
  Partition partition_true;
};

struct ScenarioData {
  GroundTruth truth;
  std::vector<Matrix> rows_per_class;  // n_per_class x p each
};

/// Symmetric 0/1 adjacency with exactly n_edges distinct off-diagonal
/// edges sampled uniformly without replacement.
Matrix erdos_renyi_adjacency(int p, int n_edges, Rng& rng);

/// The E(A,p) construction: signed weights uniform on
/// (-0.7,-0.5) U (0.5,0.7) at A's support, off-diagonal rows normalized by
/// 1.5x the row absolute sum, symmetrized, unit diagonal, then rescaled so
/// the inverse has unit diagonal.
Matrix build_E(const Matrix& adjacency, Rng& rng);

/// The R(A, Omega*, V) construction: entries at A's support equal the base
/// entry plus a uniform draw from (-v_half, v_half), then the same
/// normalization pipeline as build_E.
Matrix build_R(const Matrix& adjacency, const Matrix& base, double v_half, Rng& rng);

/// n i.i.d. rows from N(mu, Omega^-1), drawn through the Cholesky factor
/// of Omega.
Matrix mvn_sample(const Vector& mu, const Matrix& omega, int n, Rng& rng);

/// Builds the four-class ground truth and samples labeled data for the
/// named scenario. Deterministic given the scenario seed.
ScenarioData make_scenario(const Scenario& s);

}  // namespace clusterfuse
