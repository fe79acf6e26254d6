#include <benchmark/benchmark.h>

#include <random>

#include "clusterfuse/clusterer.hpp"
#include "clusterfuse/crf.hpp"
#include "clusterfuse/gen_ista.hpp"
#include "clusterfuse/operators.hpp"

using namespace clusterfuse;

namespace {

Matrix random_symmetric(int p, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) a(i, j) = gauss(rng);
  return 0.5 * (a + a.transpose());
}

Matrix random_spd(int p, std::mt19937_64& rng) {
  const Matrix a = random_symmetric(p, rng);
  return a * a.transpose() / p + 0.5 * Matrix::Identity(p, p);
}

void BM_gen_ista(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const Matrix s = random_symmetric(p, rng);
  GenIstaConfig cfg;
  cfg.gamma1 = 0.2;
  cfg.gamma2 = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(gen_ista_solve(s, cfg));
}
BENCHMARK(BM_gen_ista)->Arg(10)->Arg(20)->Arg(50);

void BM_ridge_precision_solve(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const Matrix s = random_symmetric(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ridge_precision_solve(s, 0.1));
}
BENCHMARK(BM_ridge_precision_solve)->Arg(20)->Arg(50)->Arg(100);

void BM_kmeans_partition(benchmark::State& state) {
  std::mt19937_64 rng(3);
  PrecisionSet omegas;
  for (int c = 0; c < 8; ++c) omegas.push_back(random_spd(20, rng));
  for (auto _ : state) benchmark::DoNotOptimize(kmeans_partition(omegas, 2, 100, 7));
}
BENCHMARK(BM_kmeans_partition);

void BM_crf_fit(benchmark::State& state) {
  std::mt19937_64 rng(4);
  ClassDataset data;
  data.p = 20;
  for (int c = 0; c < 4; ++c) {
    ClassStats stats;
    stats.n = 100;
    stats.mean = Vector::Zero(20);
    stats.cov = random_spd(20, rng);
    data.classes.push_back(stats);
  }
  PenaltyConfig cfg;
  cfg.lambda1 = 2.0;
  cfg.lambda2 = 5.0;
  cfg.num_clusters = 2;
  for (auto _ : state) benchmark::DoNotOptimize(crf_fit(data, cfg, 1));
}
BENCHMARK(BM_crf_fit);

}  // namespace

BENCHMARK_MAIN();
