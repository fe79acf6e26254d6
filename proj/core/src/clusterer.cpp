#include "clusterfuse/clusterer.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace clusterfuse {

namespace {

// One k-means++ seeded Lloyd run over the rows of `points` (C x p^2).
// Returns (assignment, wcss).
std::pair<std::vector<int>, double> lloyd_run(const Matrix& points, int Q,
                                              std::mt19937_64& rng) {
  const int C = static_cast<int>(points.rows());
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // k-means++ seeding.
  std::vector<int> centers;
  centers.push_back(static_cast<int>(unif(rng) * C) % C);
  Vector dist2 = (points.rowwise() - points.row(centers[0])).rowwise().squaredNorm();
  while (static_cast<int>(centers.size()) < Q) {
    const double total = dist2.sum();
    int pick = 0;
    if (total <= 0.0) {
      // all remaining points coincide with a center; pick any non-center
      for (int i = 0; i < C; ++i)
        if (std::find(centers.begin(), centers.end(), i) == centers.end()) pick = i;
    } else {
      double target = unif(rng) * total;
      for (pick = 0; pick < C - 1; ++pick) {
        target -= dist2[pick];
        if (target <= 0.0) break;
      }
    }
    centers.push_back(pick);
    dist2 = dist2.cwiseMin(
        (points.rowwise() - points.row(pick)).rowwise().squaredNorm());
  }

  Matrix means(Q, points.cols());
  for (int q = 0; q < Q; ++q) means.row(q) = points.row(centers[q]);

  // Initial assignment: nearest seed, lowest index on ties.
  std::vector<int> assign(C, 0);
  for (int c = 0; c < C; ++c) {
    double best = std::numeric_limits<double>::infinity();
    for (int q = 0; q < Q; ++q) {
      const double d = (points.row(c) - means.row(q)).squaredNorm();
      if (d < best) {
        best = d;
        assign[c] = q;
      }
    }
  }

  for (int iter = 0; iter < 1000; ++iter) {
    // Update means.
    std::vector<int> counts(Q, 0);
    means.setZero();
    for (int c = 0; c < C; ++c) {
      means.row(assign[c]) += points.row(c);
      ++counts[assign[c]];
    }
    for (int q = 0; q < Q; ++q)
      if (counts[q] > 0) means.row(q) /= counts[q];
    // Empty-cluster repair: move the point farthest from its own centroid.
    for (int q = 0; q < Q; ++q) {
      if (counts[q] > 0) continue;
      int worst = -1;
      double worst_d = -1.0;
      for (int c = 0; c < C; ++c) {
        if (counts[assign[c]] <= 1) continue;
        const double d = (points.row(c) - means.row(assign[c])).squaredNorm();
        if (d > worst_d) {
          worst_d = d;
          worst = c;
        }
      }
      --counts[assign[worst]];
      assign[worst] = q;
      counts[q] = 1;
      means.row(q) = points.row(worst);
    }

    // Reassign; equidistant points keep their current label.
    bool changed = false;
    for (int c = 0; c < C; ++c) {
      int best_q = assign[c];
      double best = (points.row(c) - means.row(assign[c])).squaredNorm();
      for (int q = 0; q < Q; ++q) {
        const double d = (points.row(c) - means.row(q)).squaredNorm();
        if (d < best) {
          best = d;
          best_q = q;
        }
      }
      if (best_q != assign[c]) {
        assign[c] = best_q;
        changed = true;
      }
    }
    if (!changed) break;
  }

  // Guard against empty blocks left by the final reassignment.
  std::vector<int> counts(Q, 0);
  for (int a : assign) ++counts[a];
  for (int q = 0; q < Q; ++q) {
    if (counts[q] == 0) {
      for (int c = 0; c < C; ++c) {
        if (counts[assign[c]] > 1) {
          --counts[assign[c]];
          assign[c] = q;
          counts[q] = 1;
          break;
        }
      }
    }
  }

  // WCSS against the final assignment's centroids.
  Matrix centroids = Matrix::Zero(Q, points.cols());
  std::fill(counts.begin(), counts.end(), 0);
  for (int c = 0; c < C; ++c) {
    centroids.row(assign[c]) += points.row(c);
    ++counts[assign[c]];
  }
  for (int q = 0; q < Q; ++q) centroids.row(q) /= std::max(counts[q], 1);
  double wcss = 0.0;
  for (int c = 0; c < C; ++c) wcss += (points.row(c) - centroids.row(assign[c])).squaredNorm();

  return {assign, wcss};
}

// Exact minimizer over all partitions into exactly Q nonempty blocks,
// enumerated as restricted growth strings. WCSS is evaluated through the
// pair-sum identity on a precomputed distance matrix.
KmeansResult exhaustive_partition(const Matrix& points, int Q) {
  const int C = static_cast<int>(points.rows());
  Matrix d2(C, C);
  for (int i = 0; i < C; ++i)
    for (int j = 0; j < C; ++j)
      d2(i, j) = (points.row(i) - points.row(j)).squaredNorm();

  KmeansResult best;
  best.wcss = std::numeric_limits<double>::infinity();
  best.start_index = 0;
  std::vector<int> assign(C, 0);

  auto score = [&]() {
    double total = 0.0;
    for (int q = 0; q < Q; ++q) {
      double pair_sum = 0.0;
      int card = 0;
      for (int i = 0; i < C; ++i) {
        if (assign[i] != q) continue;
        ++card;
        for (int j = i + 1; j < C; ++j)
          if (assign[j] == q) pair_sum += d2(i, j);
      }
      total += card > 0 ? pair_sum / card : 0.0;
    }
    return total;
  };

  // assign[0] = 0; extend with labels up to one past the current max.
  auto recurse = [&](auto&& self, int idx, int max_label) -> void {
    if (idx == C) {
      if (max_label + 1 != Q) return;
      const double wcss = score();
      if (wcss < best.wcss) {
        best.wcss = wcss;
        best.partition.assignment = assign;
        best.partition.num_blocks = Q;
      }
      return;
    }
    const int cap = std::min(max_label + 1, Q - 1);
    for (int label = 0; label <= cap; ++label) {
      assign[idx] = label;
      self(self, idx + 1, std::max(max_label, label));
    }
  };
  recurse(recurse, 1, 0);
  return best;
}

}  // namespace

KmeansResult kmeans_partition(const PrecisionSet& omegas, int Q, int n_starts,
                              std::uint64_t rng_seed) {
  const int C = static_cast<int>(omegas.size());
  if (C == 0) throw std::invalid_argument("kmeans_partition: empty input");
  if (Q < 1 || Q > C) throw std::invalid_argument("kmeans_partition: need 1 <= Q <= C");
  if (n_starts < 1) throw std::invalid_argument("kmeans_partition: n_starts must be >= 1");

  const int dim = static_cast<int>(omegas[0].size());
  Matrix points(C, dim);
  for (int c = 0; c < C; ++c)
    points.row(c) = Eigen::Map<const Vector>(omegas[c].data(), dim).transpose();

  if (C <= 10) {  // small enough to solve the subproblem exactly
    KmeansResult exact = exhaustive_partition(points, Q);
    exact.partition.validate();
    return exact;
  }

  KmeansResult best;
  best.wcss = std::numeric_limits<double>::infinity();
  for (int start = 0; start < n_starts; ++start) {
    std::seed_seq seq{rng_seed, static_cast<std::uint64_t>(start)};
    std::mt19937_64 rng(seq);
    auto [assign, wcss] = lloyd_run(points, Q, rng);
    if (wcss < best.wcss) {  // strict: ties keep the lowest start index
      best.wcss = wcss;
      best.partition.assignment = assign;
      best.partition.num_blocks = Q;
      best.start_index = start;
    }
  }
  best.partition.validate();
  return best;
}

double partition_objective(const PrecisionSet& omegas, const Partition& part) {
  part.validate();
  double total = 0.0;
  for (const auto& block : part.blocks()) {
    double pair_sum = 0.0;
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        pair_sum += (omegas[block[i]] - omegas[block[j]]).squaredNorm();
    total += pair_sum / static_cast<double>(block.size());
  }
  return total;
}

}  // namespace clusterfuse
