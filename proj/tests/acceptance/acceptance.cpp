// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "clusterfuse/clusterer.hpp"
#include "clusterfuse/crf.hpp"
#include "clusterfuse/gen_ista.hpp"
#include "clusterfuse/model.hpp"
#include "clusterfuse/operators.hpp"
#include "clusterfuse/pcen.hpp"
#include "clusterfuse/qda.hpp"
#include "clusterfuse/simgen.hpp"
#include "clusterfuse/tuning.hpp"
#include "support/helpers.hpp"

using namespace clusterfuse;
namespace ts = testsupport;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ClassDataset dataset_from_scenario(const ScenarioData& sim, int n_per_class, int p) {
  ClassDataset data;
  data.p = p;
  for (int c = 0; c < 4; ++c) {
    ClassStats stats;
    stats.n = n_per_class;
    stats.mean = sim.rows_per_class[c].colwise().mean().transpose();
    const Matrix centered = sim.rows_per_class[c].rowwise() - stats.mean.transpose();
    stats.cov = centered.transpose() * centered / n_per_class;
    data.classes.push_back(stats);
  }
  return data;
}

ClassDataset random_dataset(int C, int p, int n, std::mt19937_64& rng) {
  ClassDataset data;
  data.p = p;
  for (int c = 0; c < C; ++c) {
    ClassStats stats;
    stats.n = n;
    stats.mean = Vector::Zero(p);
    stats.cov = ts::random_spd(p, rng);
    data.classes.push_back(stats);
  }
  return data;
}

// ---- criterion 1: gen_ista equals the slow reference and satisfies KKT ----
bool criterion1(std::string& note) {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  const double g1s[] = {0.05, 0.2, 1.0};
  const double g2s[] = {0.1, 1.0};
  double worst_gap = 0.0, worst_kkt = 0.0, solver_time = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix s = ts::random_symmetric(5, rng);
    const double g1 = g1s[trial % 3];
    const double g2 = g2s[(trial / 3) % 2];
    GenIstaConfig cfg;
    cfg.gamma1 = g1;
    cfg.gamma2 = g2;
    cfg.eps = 1e-15;
    cfg.max_iter = 300000;
    const auto t0 = Clock::now();
    const auto res = gen_ista_solve(s, cfg);
    solver_time += seconds_since(t0);
    const Matrix ref = ts::slow_en_solve(s, g1, g2, 1e-3, 1e-7);
    worst_gap = std::max(worst_gap, (res.omega - ref).norm());
    worst_kkt = std::max(worst_kkt, ts::en_kkt_residual(s, res.omega, g1, g2));
  }
  const double total = seconds_since(start);
  std::ostringstream os;
  os << "max |solution - reference|_F = " << worst_gap << ", max KKT residual = "
     << worst_kkt << ", solver time " << solver_time << "s (suite " << total << "s)";
  note = os.str();
  return worst_gap <= 1e-5 && worst_kkt <= 1e-6 && total < 30.0;
}

// ---- criteria 2 and 3: Theorem 1 rate and Lemma 1/3 containment ----
void criteria23(bool& pass2, bool& pass3, std::string& note2, std::string& note3) {
  std::mt19937_64 rng(102);
  double worst_ratio_excess = -1.0;
  double worst_containment = 0.0;
  bool bounds_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    const int p = 3 + static_cast<int>(rng() % 8);  // 3..10
    const Matrix s = ts::random_symmetric(p, rng);
    const double g1 = 0.1 + 0.05 * (trial % 4);
    const double g2 = (trial % 2 == 0) ? 0.5 : 1.5;
    const SpectralBounds sb = compute_bounds(s, g1, g2);

    GenIstaConfig tight;
    tight.gamma1 = g1;
    tight.gamma2 = g2;
    tight.eps = 1e-13;
    tight.max_iter = 200000;
    Matrix star = gen_ista_solve(s, tight).omega;
    // polish well past the 1e-8 distance floor of the rate check
    for (int k = 0; k < 400; ++k) {
      const Matrix grad = s - star.inverse() + 2.0 * g2 * star;
      star = soft_threshold(star - sb.t_w * grad, sb.t_w * g1);
    }

    // Lemma 1 containment of the optimum
    {
      Eigen::SelfAdjointEigenSolver<Matrix> eig(star);
      worst_containment =
          std::max({worst_containment, sb.alpha - eig.eigenvalues().minCoeff(),
                    eig.eigenvalues().maxCoeff() - sb.beta});
    }

    // Lemma 3 containment under the admissible fixed step min(t_w, t_max)
    const double t_feasible = std::min(sb.t_w, sb.t_max);
    Matrix omega = sb.alpha * Matrix::Identity(p, p);
    for (int k = 0; k < 400; ++k) {
      const Matrix grad = s - omega.inverse() + 2.0 * g2 * omega;
      omega = soft_threshold(omega - t_feasible * grad, t_feasible * g1);
      Eigen::SelfAdjointEigenSolver<Matrix> eig(omega);
      worst_containment =
          std::max({worst_containment, sb.alpha - eig.eigenvalues().minCoeff(),
                    eig.eigenvalues().maxCoeff() - sb.b_prime});
    }

    // Theorem 1 rate at the worst-case optimal step t_w
    omega = sb.alpha * Matrix::Identity(p, p);
    double prev = (omega - star).norm();
    for (int k = 0; k < 2000 && prev > 1e-8; ++k) {
      const Matrix grad = s - omega.inverse() + 2.0 * g2 * omega;
      omega = soft_threshold(omega - sb.t_w * grad, sb.t_w * g1);
      const double dist = (omega - star).norm();
      worst_ratio_excess = std::max(worst_ratio_excess, dist / prev - sb.delta);
      prev = dist;
    }
  }

  // delta decreases monotonically in gamma2
  double prev_delta = 2.0;
  bool monotone = true;
  for (double g2 : {0.1, 1.0, 10.0, 100.0}) {
    const double d = step_bounds(0.4, 1.1, g2, 6).delta;
    if (d >= prev_delta) monotone = false;
    prev_delta = d;
  }

  {
    std::ostringstream os;
    os << "max (ratio - delta) = " << worst_ratio_excess
       << (monotone ? ", delta strictly decreasing in gamma2" : ", delta NOT monotone");
    note2 = os.str();
  }
  {
    std::ostringstream os;
    os << "max eigenvalue-bound violation = " << worst_containment;
    note3 = os.str();
  }
  bounds_ok = worst_containment <= 1e-8;
  pass2 = worst_ratio_excess <= 1e-6 && monotone;
  pass3 = bounds_ok;
}

// ---- criterion 4: monotone descent and termination of the alternation ----
bool criterion4(std::string& note) {
  std::mt19937_64 rng(104);
  double worst_increase = 0.0;
  int max_rounds = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const ClassDataset data = random_dataset(4, 10, 40, rng);
    PenaltyConfig cfg;
    cfg.lambda1 = 2.0;
    cfg.lambda2 = 4.0;
    cfg.num_clusters = 2;
    for (int method = 0; method < 2; ++method) {
      const FitResult fit =
          method == 0 ? crf_fit(data, cfg, trial) : pcen_fit(data, cfg, trial);
      if (!fit.report.converged) {
        note = "alternation did not terminate";
        return false;
      }
      max_rounds = std::max(max_rounds, fit.report.outer_rounds);
      const auto& trace = fit.report.objective_trace;
      for (std::size_t k = 1; k < trace.size(); ++k)
        worst_increase = std::max(worst_increase, trace[k] - trace[k - 1]);
    }
  }
  std::ostringstream os;
  os << "max objective increase = " << worst_increase << ", max outer rounds = "
     << max_rounds;
  note = os.str();
  return worst_increase <= 1e-8 && max_rounds <= 25;
}

// ---- criterion 5: analytic reductions ----
bool criterion5(std::string& note) {
  std::mt19937_64 rng(105);
  double worst = 0.0;

  // lambda2 = 0 PCEN equals per-class L1 solves
  {
    const ClassDataset data = random_dataset(3, 4, 25, rng);
    PenaltyConfig cfg;
    cfg.lambda1 = 1.0;
    cfg.lambda2 = 0.0;
    cfg.num_clusters = 1;
    cfg.tol = 1e-12;
    const auto joint = pcen_inner_solve(data, Partition::single_block(3), cfg);
    for (int c = 0; c < 3; ++c) {
      GenIstaConfig gcfg;
      gcfg.gamma1 = cfg.lambda1 / data.classes[c].n;
      gcfg.gamma2 = 0.0;
      gcfg.eps = 1e-15;
      gcfg.max_iter = 100000;
      const auto solo = gen_ista_solve(data.classes[c].cov, gcfg);
      const double gap = (joint[c] - solo.omega).norm();
      if (gap > 1e-6) {
        note = "lambda2=0 PCEN deviates from separate L1 solves";
        return false;
      }
    }
  }

  // lambda2 = 0 CRF equals closed-form ridge solves
  {
    const ClassDataset data = random_dataset(3, 5, 30, rng);
    PenaltyConfig cfg;
    cfg.lambda1 = 2.0;
    cfg.lambda2 = 0.0;
    cfg.num_clusters = 1;
    const auto omegas = crf_inner_solve(data, Partition::single_block(3), cfg);
    for (int c = 0; c < 3; ++c) {
      const Matrix expected = ridge_precision_solve(
          data.classes[c].cov, cfg.lambda1 / (2.0 * data.classes[c].n));
      worst = std::max(worst, (omegas[c] - expected).cwiseAbs().maxCoeff());
    }
    if (worst > 1e-8) {
      note = "lambda2=0 CRF deviates from ridge closed forms";
      return false;
    }
  }

  // Q=1 CRF fit equals the joint RF solve
  {
    const ClassDataset data = random_dataset(3, 4, 30, rng);
    PenaltyConfig cfg;
    cfg.lambda1 = 1.5;
    cfg.lambda2 = 3.0;
    cfg.num_clusters = 1;
    cfg.tol = 1e-10;
    const FitResult fit = crf_fit(data, cfg, 0);
    const auto direct = crf_inner_solve(data, Partition::single_block(3), cfg);
    for (int c = 0; c < 3; ++c)
      if ((fit.omegas[c] - direct[c]).norm() > 1e-8) {
        note = "Q=1 CRF fit differs from the RF joint solve";
        return false;
      }
  }

  // diagonal gen_ista matches ridge_eig
  {
    Matrix d = Matrix::Zero(3, 3);
    d.diagonal() << 0.5, 1.0, 2.0;
    GenIstaConfig cfg;
    cfg.gamma1 = 0.3;
    cfg.gamma2 = 0.8;
    cfg.eps = 1e-16;
    cfg.max_iter = 300000;
    const auto res = gen_ista_solve(d, cfg);
    for (int j = 0; j < 3; ++j) {
      const double expected = ridge_eig(d(j, j) + cfg.gamma1, cfg.gamma2);
      worst = std::max(worst, std::abs(res.omega(j, j) - expected));
    }
    if (worst > 1e-8) {
      note = "diagonal gen_ista deviates from ridge_eig closed forms";
      return false;
    }
  }
  std::ostringstream os;
  os << "all reductions hold (worst closed-form gap " << worst << ")";
  note = os.str();
  return true;
}

// ---- criterion 6: k-means subproblem ----
bool criterion6(std::string& note) {
  std::mt19937_64 rng(106);

  double worst_identity = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    PrecisionSet omegas;
    const int c = 3 + static_cast<int>(rng() % 4);
    for (int i = 0; i < c; ++i) omegas.push_back(ts::random_spd(3, rng));
    std::vector<int> assign(c);
    const int q = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < c; ++i) assign[i] = i % q;
    Partition part{assign, q};
    const double value = partition_objective(omegas, part);
    worst_identity =
        std::max({worst_identity, std::abs(value - ts::pair_sum_ref(omegas, assign)),
                  std::abs(value - ts::wcss_ref(omegas, assign))});
  }
  if (worst_identity > 1e-10) {
    note = "pair-sum/WCSS identity violated";
    return false;
  }

  int planted_hits = 0;
  for (int trial = 0; trial < 100; ++trial) {
    PrecisionSet omegas;
    for (int i = 0; i < 4; ++i) {
      const double scale = i < 2 ? 1.0 : 6.0;
      omegas.push_back(scale * Matrix::Identity(3, 3) + 0.05 * ts::random_spd(3, rng));
    }
    const auto res = kmeans_partition(omegas, 2, 100, trial);
    if (res.partition.equivalent(Partition{{0, 0, 1, 1}, 2})) ++planted_hits;
  }

  int exhaustive_hits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int c = 4 + static_cast<int>(rng() % 3);  // 4..6
    const int q = 2 + static_cast<int>(rng() % 2);
    PrecisionSet omegas;
    for (int i = 0; i < c; ++i) omegas.push_back(ts::random_spd(2, rng));
    const auto res = kmeans_partition(omegas, q, 100, 1000 + trial);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& assign : ts::all_set_partitions(c))
      if (ts::num_blocks(assign) == q) best = std::min(best, ts::wcss_ref(omegas, assign));
    if (res.wcss <= best + 1e-8) ++exhaustive_hits;
  }

  std::ostringstream os;
  os << "identity gap " << worst_identity << ", planted recovery " << planted_hits
     << "/100, exhaustive match " << exhaustive_hits << "/200";
  note = os.str();
  return planted_hits == 100 && exhaustive_hits == 200;
}

// ---- criterion 7: cluster recovery and fusion benefit at desk scale ----
bool criterion7(std::string& note) {
  const auto start = Clock::now();
  const std::vector<double> lambda1_grid{2.0, 5.0, 10.0};
  const int reps = 10;
  int recovered = 0;
  std::vector<double> fused_err(lambda1_grid.size(), 0.0);
  std::vector<double> separate_err(lambda1_grid.size(), 0.0);

  for (int rep = 0; rep < reps; ++rep) {
    Scenario sc;
    sc.name = ScenarioName::block_er;
    sc.p = 20;
    sc.n_per_class = 200;
    sc.rng_seed = 700 + rep;
    const ScenarioData sim = make_scenario(sc);
    const ClassDataset data = dataset_from_scenario(sim, sc.n_per_class, sc.p);

    bool rep_recovered = false;
    for (std::size_t g = 0; g < lambda1_grid.size(); ++g) {
      PenaltyConfig fused;
      fused.lambda1 = lambda1_grid[g];
      fused.lambda2 = 10.0;
      fused.num_clusters = 2;
      const FitResult fit = pcen_fit(data, fused, rep);
      fused_err[g] += metric_frob_error(sim.truth.omegas_true, fit.omegas) / reps;
      if (g == 0 && fit.partition.equivalent(sim.truth.partition_true))
        rep_recovered = true;

      PenaltyConfig separate = fused;
      separate.lambda2 = 0.0;
      separate.num_clusters = 1;
      const FitResult base = pcen_fit(data, separate, rep);
      separate_err[g] += metric_frob_error(sim.truth.omegas_true, base.omegas) / reps;
    }
    if (rep_recovered) ++recovered;
  }

  const double best_fused = *std::min_element(fused_err.begin(), fused_err.end());
  const double best_separate = *std::min_element(separate_err.begin(), separate_err.end());
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "partition recovered " << recovered << "/10, frob error fused " << best_fused
     << " vs separate " << best_separate << ", " << elapsed << "s";
  note = os.str();
  return recovered >= 8 && best_fused <= best_separate && elapsed < 600.0;
}

// ---- criterion 8: QDA simulation at desk scale ----
bool criterion8(std::string& note) {
  const auto start = Clock::now();
  const int reps = 20, n_train = 25, n_test = 500, p = 20;
  double crf_err = 0.0, rf_err = 0.0, tc_err = 0.0;

  TuningGrid crf_grid;
  crf_grid.lambda1_values = {0.5, 2.0, 8.0};
  crf_grid.lambda2_values = {1e3, 2e4, 1e6};
  crf_grid.q_values = {2};
  TuningGrid rf_grid;
  rf_grid.lambda1_values = {0.5, 2.0, 8.0, 32.0};
  rf_grid.lambda2_values = {0.0};
  rf_grid.q_values = {1};

  for (int rep = 0; rep < reps; ++rep) {
    Scenario sc;
    sc.name = ScenarioName::qda_dense;
    sc.p = p;
    sc.n_per_class = n_train;
    sc.rho = 0.40;
    sc.rng_seed = 800 + rep;
    const ScenarioData sim = make_scenario(sc);
    const ClassDataset data = dataset_from_scenario(sim, n_train, p);

    Matrix rows(4 * n_train, p);
    std::vector<int> labels(4 * n_train);
    for (int c = 0; c < 4; ++c) {
      rows.middleRows(c * n_train, n_train) = sim.rows_per_class[c];
      std::fill_n(labels.begin() + c * n_train, n_train, c);
    }

    Rng trng(9000 + rep);
    Matrix test_rows(4 * n_test, p);
    std::vector<int> test_labels(4 * n_test);
    for (int c = 0; c < 4; ++c) {
      test_rows.middleRows(c * n_test, n_test) =
          mvn_sample(sim.truth.mus_true[c], sim.truth.omegas_true[c], n_test, trng);
      std::fill_n(test_labels.begin() + c * n_test, n_test, c);
    }

    auto evaluate = [&](const PrecisionSet& omegas) {
      QdaModel model;
      model.omegas = omegas;
      for (const auto& stats : data.classes) model.mus.push_back(stats.mean);
      model.log_priors = QdaModel::empirical_log_priors(data);
      return classification_error(model, test_rows, test_labels);
    };

    TuningGrid g1 = crf_grid;
    g1.rng_seed = rep;
    const CvResult crf_cv = cv_select(rows, labels, g1, Method::crf);
    crf_err += evaluate(crf_fit(data, crf_cv.best, rep).omegas) / reps;

    TuningGrid g2 = rf_grid;
    g2.rng_seed = rep;
    const CvResult rf_cv = cv_select(rows, labels, g2, Method::crf);
    rf_err += evaluate(crf_fit(data, rf_cv.best, rep).omegas) / reps;

    tc_err += evaluate(sim.truth.omegas_true) / reps;
  }

  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "mean error: CRF " << crf_err << ", RF " << rf_err << ", TC " << tc_err << ", "
     << elapsed << "s";
  note = os.str();
  return crf_err >= 0.05 && crf_err <= 0.20 && crf_err <= rf_err - 0.05 &&
         tc_err < rf_err && elapsed < 1200.0;
}

// ---- criterion 9: generator invariants ----
bool criterion9(std::string& note) {
  double worst_unit = 0.0;
  bool support_ok = true, spd_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const int p = trial % 2 == 0 ? 10 : 20;
    Rng rng(900 + trial);
    const Matrix adj = erdos_renyi_adjacency(p, p, rng);
    const Matrix e = build_E(adj, rng);
    const Matrix r = build_R(adj, e, 0.01, rng);
    for (const Matrix* m : {&e, &r}) {
      if (!ts::is_pd(*m)) spd_ok = false;
      worst_unit = std::max(
          worst_unit, (m->inverse().diagonal().array() - 1.0).abs().maxCoeff());
      for (int i = 0; i < p && support_ok; ++i)
        for (int j = 0; j < p; ++j)
          if (i != j && ((std::abs((*m)(i, j)) > 1e-12) != (adj(i, j) != 0.0))) {
            support_ok = false;
            break;
          }
    }
  }

  bool diff_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    Scenario sc;
    sc.name = ScenarioName::block_er;
    sc.p = 20;
    sc.n_per_class = 2;
    sc.rng_seed = 950 + trial;
    const ScenarioData sim = make_scenario(sc);
    int diff = 0;
    const Matrix& a = sim.truth.omegas_true[0];
    const Matrix& b = sim.truth.omegas_true[1];
    for (int i = 0; i < sc.p; ++i)
      for (int j = 0; j < sc.p; ++j)
        if (i != j && ((std::abs(a(i, j)) > 1e-12) != (std::abs(b(i, j)) > 1e-12))) ++diff;
    if (diff != 8) diff_ok = false;
  }

  std::ostringstream os;
  os << "max unit-variance deviation " << worst_unit
     << (support_ok ? ", supports match" : ", SUPPORT MISMATCH")
     << (diff_ok ? ", support difference 8/8" : ", SUPPORT DIFFERENCE WRONG");
  note = os.str();
  return spd_ok && support_ok && worst_unit <= 1e-8 && diff_ok;
}

// ---- criterion 10: CLI determinism ----
bool criterion10(std::string& note) {
  const std::string cli = CLUSTERFUSE_CLI_PATH;
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  };
  auto run = [&](const std::string& args) {
    return std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
  };

  // build a toy input
  const std::string csv = "/tmp/clusterfuse_acc_toy.csv";
  {
    Rng rng(42);
    std::ofstream out(csv);
    for (int c = 0; c < 2; ++c) {
      const Matrix rows =
          mvn_sample(Vector::Constant(3, 2.0 * c), Matrix::Identity(3, 3), 40, rng);
      for (int i = 0; i < 40; ++i)
        out << rows(i, 0) << "," << rows(i, 1) << "," << rows(i, 2) << "," << c << "\n";
    }
  }

  bool ok = true;
  const std::string est =
      "estimate --input " + csv + " --method pcen --lambda1 2 --lambda2 1 --q 1 --seed 9";
  ok &= run(est + " --output /tmp/clusterfuse_acc_m1.json") == 0;
  ok &= run(est + " --output /tmp/clusterfuse_acc_m2.json") == 0;
  ok &= slurp("/tmp/clusterfuse_acc_m1.json") == slurp("/tmp/clusterfuse_acc_m2.json");

  const std::string sim = "simulate --scenario blockdiag_er --p 10 --n 30 --reps 2 --seed 4";
  ok &= run(sim + " --output /tmp/clusterfuse_acc_s1.csv") == 0;
  ok &= run(sim + " --output /tmp/clusterfuse_acc_s2.csv --workers 4") == 0;
  ok &= slurp("/tmp/clusterfuse_acc_s1.csv") == slurp("/tmp/clusterfuse_acc_s2.csv");

  note = ok ? "estimate and simulate outputs byte-identical across reruns"
            : "outputs differ across identical invocations";
  return ok;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int idx, const char* name, bool pass, const std::string& note) {
    std::printf("criterion %2d %-34s %s  (%s)\n", idx, name, pass ? "PASS" : "FAIL",
                note.c_str());
    if (!pass) ++failures;
    std::fflush(stdout);
  };

  std::string note;
  bool ok;

  ok = criterion1(note);
  report(1, "gen-ista oracle equivalence", ok, note);

  std::string note2, note3;
  bool pass2 = false, pass3 = false;
  criteria23(pass2, pass3, note2, note3);
  report(2, "theorem-1 contraction rate", pass2, note2);
  report(3, "lemma-1/3 eigenvalue containment", pass3, note3);

  ok = criterion4(note);
  report(4, "monotone descent + termination", ok, note);
  ok = criterion5(note);
  report(5, "analytic reductions", ok, note);
  ok = criterion6(note);
  report(6, "k-means subproblem", ok, note);
  ok = criterion7(note);
  report(7, "cluster recovery in GGM sims", ok, note);
  ok = criterion8(note);
  report(8, "QDA simulation error rates", ok, note);
  ok = criterion9(note);
  report(9, "generator invariants", ok, note);
  ok = criterion10(note);
  report(10, "CLI determinism", ok, note);

  std::printf(
      "criterion 11 Libras workflow                   SKIP  (requires the user-supplied "
      "UCI Libras file; run qda train/predict manually)\n");

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all automated criteria passed\n");
  return 0;
}
