#include "clusterfuse/simgen.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace clusterfuse {

ScenarioName scenario_from_string(const std::string& name) {
  if (name == "block_er") return ScenarioName::block_er;
  if (name == "blockdiag_er") return ScenarioName::blockdiag_er;
  if (name == "blockdiag_identity") return ScenarioName::blockdiag_identity;
  if (name == "qda_dense") return ScenarioName::qda_dense;
  throw std::invalid_argument("unknown scenario: " + name);
}

std::string to_string(ScenarioName name) {
  switch (name) {
    case ScenarioName::block_er: return "block_er";
    case ScenarioName::blockdiag_er: return "blockdiag_er";
    case ScenarioName::blockdiag_identity: return "blockdiag_identity";
    case ScenarioName::qda_dense: return "qda_dense";
  }
  return "?";
}

Matrix erdos_renyi_adjacency(int p, int n_edges, Rng& rng) {
  const long max_edges = static_cast<long>(p) * (p - 1) / 2;
  if (n_edges < 0 || n_edges > max_edges)
    throw std::invalid_argument("erdos_renyi_adjacency: edge count out of range");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(max_edges);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) pairs.emplace_back(i, j);
  // Partial Fisher-Yates: the first n_edges entries are a uniform sample
  // without replacement.
  for (int k = 0; k < n_edges; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, pairs.size() - 1);
    std::swap(pairs[k], pairs[pick(rng)]);
  }
  Matrix adj = Matrix::Zero(p, p);
  for (int k = 0; k < n_edges; ++k) {
    adj(pairs[k].first, pairs[k].second) = 1.0;
    adj(pairs[k].second, pairs[k].first) = 1.0;
  }
  return adj;
}

namespace {

// Shared tail of build_E / build_R: normalize the off-diagonal rows by 1.5x
// the row absolute sum, symmetrize, set the diagonal to 1, then rescale so
// the inverse has an exactly unit diagonal.
Matrix finalize_precision(Matrix weights) {
  const int p = static_cast<int>(weights.rows());
  for (int i = 0; i < p; ++i) {
    const double row_sum = weights.row(i).cwiseAbs().sum();
    if (row_sum > 0.0) weights.row(i) /= (1.5 * row_sum);
  }
  Matrix omega = 0.5 * (weights + weights.transpose());
  omega.diagonal().setOnes();

  Eigen::LLT<Matrix> llt(omega);
  while (llt.info() != Eigen::Success) {
    // Row normalization leaves a dominant diagonal in all but pathological
    // draws; shrink the off-diagonal mass if one slips through.
    omega = 0.9 * omega;
    omega.diagonal().setOnes();
    llt.compute(omega);
  }
  const Matrix sigma = llt.solve(Matrix::Identity(p, p));
  const Vector d = sigma.diagonal().cwiseSqrt();
  return d.asDiagonal() * omega * d.asDiagonal();
}

// Removes n_remove distinct edges (symmetric entry pairs) from adj.
Matrix remove_edges(const Matrix& adj, int n_remove, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < adj.rows(); ++i)
    for (int j = i + 1; j < adj.cols(); ++j)
      if (adj(i, j) != 0.0) edges.emplace_back(i, j);
  if (n_remove > static_cast<int>(edges.size()))
    throw std::invalid_argument("remove_edges: not enough edges");
  for (int k = 0; k < n_remove; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, edges.size() - 1);
    std::swap(edges[k], edges[pick(rng)]);
  }
  Matrix out = adj;
  for (int k = 0; k < n_remove; ++k) {
    out(edges[k].first, edges[k].second) = 0.0;
    out(edges[k].second, edges[k].first) = 0.0;
  }
  return out;
}

Matrix block_diag(const Matrix& upper, const Matrix& lower) {
  const int bu = static_cast<int>(upper.rows());
  const int bl = static_cast<int>(lower.rows());
  Matrix out = Matrix::Zero(bu + bl, bu + bl);
  out.topLeftCorner(bu, bu) = upper;
  out.bottomRightCorner(bl, bl) = lower;
  return out;
}

// Places `sub` on the index set `idx` of a p x p zero matrix.
Matrix scatter(const Matrix& sub, const std::vector<int>& idx, int p) {
  Matrix out = Matrix::Zero(p, p);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) out(idx[a], idx[b]) = sub(a, b);
  return out;
}

}  // namespace

Matrix build_E(const Matrix& adjacency, Rng& rng) {
  const int p = static_cast<int>(adjacency.rows());
  std::uniform_real_distribution<double> mag(0.5, 0.7);
  std::uniform_int_distribution<int> coin(0, 1);
  Matrix weights = Matrix::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (adjacency(i, j) == 0.0) continue;
      const double value = (coin(rng) ? 1.0 : -1.0) * mag(rng);
      weights(i, j) = value;
      weights(j, i) = value;
    }
  }
  return finalize_precision(std::move(weights));
}

Matrix build_R(const Matrix& adjacency, const Matrix& base, double v_half, Rng& rng) {
  if (adjacency.rows() != base.rows())
    throw std::invalid_argument("build_R: adjacency/base dimension mismatch");
  const int p = static_cast<int>(adjacency.rows());
  std::uniform_real_distribution<double> noise(-v_half, v_half);
  Matrix weights = Matrix::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (adjacency(i, j) == 0.0) continue;
      const double value = base(i, j) + noise(rng);
      weights(i, j) = value;
      weights(j, i) = value;
    }
  }
  return finalize_precision(std::move(weights));
}

Matrix mvn_sample(const Vector& mu, const Matrix& omega, int n, Rng& rng) {
  const int p = static_cast<int>(omega.rows());
  if (mu.size() != p) throw std::invalid_argument("mvn_sample: dimension mismatch");
  Eigen::LLT<Matrix> llt(omega);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("mvn_sample: precision matrix not positive definite");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix rows(n, p);
  Vector z(p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) z[j] = gauss(rng);
    // cov(U^-1 z) = (L L^T)^-1 = Omega^-1
    rows.row(i) = (mu + llt.matrixU().solve(z)).transpose();
  }
  return rows;
}

ScenarioData make_scenario(const Scenario& s) {
  Rng rng(s.rng_seed);
  const int p = s.p;
  ScenarioData out;
  auto& truth = out.truth;

  // The support difference is counted over both triangles, so dropping one
  // undirected edge changes two matrix entries.
  constexpr int kEdgesDropped = 2;

  if (s.name != ScenarioName::qda_dense) {
    if (p % 2 != 0)
      throw std::invalid_argument("make_scenario: block scenarios require even p");
    const int b = p / 2;
    const double v = 0.01;

    const Matrix a1 = erdos_renyi_adjacency(b, b, rng);
    const Matrix a2 = erdos_renyi_adjacency(b, b, rng);
    const Matrix upper = build_E(a1, rng);
    const Matrix lower = build_E(a2, rng);

    switch (s.name) {
      case ScenarioName::block_er: {
        truth.omegas_true.push_back(block_diag(upper, lower));
        const Matrix a3 = remove_edges(a1, kEdgesDropped, rng);
        const Matrix a4 = remove_edges(a2, kEdgesDropped, rng);
        truth.omegas_true.push_back(
            block_diag(build_R(a3, upper, v, rng), build_R(a4, lower, v, rng)));

        std::vector<int> idx(p);
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        const std::vector<int> s1(idx.begin(), idx.begin() + b);
        const std::vector<int> s2(idx.begin() + b, idx.end());
        const Matrix a5 = erdos_renyi_adjacency(b, b, rng);
        const Matrix a6 = erdos_renyi_adjacency(b, b, rng);
        const Matrix g = build_E(a5, rng);
        const Matrix h = build_E(a6, rng);
        truth.omegas_true.push_back(scatter(g, s1, p) + scatter(h, s2, p));
        const Matrix a7 = remove_edges(a5, kEdgesDropped, rng);
        const Matrix a8 = remove_edges(a6, kEdgesDropped, rng);
        truth.omegas_true.push_back(scatter(build_R(a7, g, v, rng), s1, p) +
                                    scatter(build_R(a8, h, v, rng), s2, p));
        break;
      }
      case ScenarioName::blockdiag_er: {
        const int dropped4 = std::max<int>(1, std::lround(0.1 * b));
        truth.omegas_true.push_back(block_diag(upper, lower));
        const Matrix a3 = remove_edges(a1, kEdgesDropped, rng);
        const Matrix a4 = remove_edges(a2, dropped4, rng);
        truth.omegas_true.push_back(
            block_diag(build_R(a3, upper, v, rng), build_R(a4, lower, v, rng)));
        const Matrix a5 = erdos_renyi_adjacency(b, b, rng);
        const Matrix a6 = erdos_renyi_adjacency(b, b, rng);
        const Matrix g = build_E(a5, rng);
        const Matrix h = build_E(a6, rng);
        truth.omegas_true.push_back(block_diag(g, h));
        const Matrix a7 = remove_edges(a5, kEdgesDropped, rng);
        const Matrix a8 = remove_edges(a6, dropped4, rng);
        truth.omegas_true.push_back(
            block_diag(build_R(a7, g, v, rng), build_R(a8, h, v, rng)));
        break;
      }
      case ScenarioName::blockdiag_identity: {
        const Matrix eye = Matrix::Identity(b, b);
        truth.omegas_true.push_back(block_diag(upper, eye));
        const Matrix a3 = remove_edges(a1, kEdgesDropped, rng);
        truth.omegas_true.push_back(block_diag(build_R(a3, upper, v, rng), eye));
        const Matrix a5 = erdos_renyi_adjacency(b, b, rng);
        const Matrix g = build_E(a5, rng);
        truth.omegas_true.push_back(block_diag(g, eye));
        const Matrix a7 = remove_edges(a5, kEdgesDropped, rng);
        truth.omegas_true.push_back(block_diag(build_R(a7, g, v, rng), eye));
        break;
      }
      default: break;
    }
    for (int c = 0; c < 4; ++c) truth.mus_true.push_back(Vector::Zero(p));
  } else {
    if (s.rho <= -1.0 || s.rho >= 1.0)
      throw std::invalid_argument("make_scenario: rho must lie in (-1,1)");
    if (p > 100)
      throw std::invalid_argument("make_scenario: qda_dense requires p <= 100");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix z3(100, p);
    for (int i = 0; i < 100; ++i)
      for (int j = 0; j < p; ++j) z3(i, j) = gauss(rng);
    Eigen::JacobiSVD<Matrix> svd(z3, Eigen::ComputeThinV);
    const Matrix v3 = svd.matrixV();  // p x p

    auto spectrum_diag = [p](double a, double b) {
      Vector d(p);
      for (int j = 0; j < p; ++j) d[j] = (a - b) / (j + 1);
      return d;
    };
    auto tridiag = [p](double off) {
      Matrix m = Matrix::Identity(p, p);
      for (int j = 0; j + 1 < p; ++j) {
        m(j, j + 1) = off;
        m(j + 1, j) = off;
      }
      return m;
    };

    std::vector<Matrix> sigmas;
    sigmas.push_back(v3 * spectrum_diag(1000.0, 100.0).asDiagonal() * v3.transpose());
    sigmas.push_back(v3 * spectrum_diag(999.0, 99.0).asDiagonal() * v3.transpose());
    sigmas.push_back(tridiag(0.45));
    sigmas.push_back(tridiag(s.rho));
    for (const auto& sigma : sigmas) {
      Eigen::LLT<Matrix> llt(sigma);
      truth.omegas_true.push_back(llt.solve(Matrix::Identity(p, p)));
    }
    const double base = std::log(static_cast<double>(p)) / p;
    truth.mus_true.push_back(Vector::Constant(p, 20.0 * base));
    truth.mus_true.push_back(Vector::Constant(p, -10.0 * base));
    truth.mus_true.push_back(Vector::Constant(p, 10.0 * base));
    truth.mus_true.push_back(Vector::Constant(p, -20.0 * base));
  }

  truth.partition_true.assignment = {0, 0, 1, 1};
  truth.partition_true.num_blocks = 2;

  for (int c = 0; c < 4; ++c)
    out.rows_per_class.push_back(
        mvn_sample(truth.mus_true[c], truth.omegas_true[c], s.n_per_class, rng));
  return out;
}

}  // namespace clusterfuse
