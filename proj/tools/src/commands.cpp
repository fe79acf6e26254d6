#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <thread>
#include <tuple>

#include "clusterfuse/crf.hpp"
#include "clusterfuse/model.hpp"
#include "clusterfuse/pcen.hpp"
#include "clusterfuse/qda.hpp"
#include "clusterfuse/simgen.hpp"
#include "clusterfuse/tuning.hpp"
#include "io.hpp"

namespace clusterfuse::cli {

namespace {

using io::format_double;

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 step keyed by the stream index
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

FitResult fit_with_method(const ClassDataset& data, Method method, const PenaltyConfig& cfg,
                          std::uint64_t seed) {
  return method == Method::crf ? crf_fit(data, cfg, seed) : pcen_fit(data, cfg, seed);
}

int offdiag_nonzeros(const Matrix& omega, double tol = 1e-8) {
  int count = 0;
  for (int i = 0; i < omega.rows(); ++i)
    for (int j = 0; j < omega.cols(); ++j)
      if (i != j && std::abs(omega(i, j)) > tol) ++count;
  return count;
}

void print_fit_summary(const FitResult& fit, const std::vector<int>& class_labels) {
  std::cout << "partition:";
  for (std::size_t c = 0; c < class_labels.size(); ++c)
    std::cout << " " << class_labels[c] << "->" << fit.partition.assignment[c] + 1;
  std::cout << "\n";
  std::cout << "offdiag_nonzeros:";
  for (const auto& omega : fit.omegas) std::cout << " " << offdiag_nonzeros(omega);
  std::cout << "\n";
  std::cout << "outer_rounds: " << fit.report.outer_rounds << "\n";
  std::cout << "converged: " << (fit.report.converged ? "yes" : "no") << "\n";
  if (!fit.report.objective_trace.empty())
    std::cout << "final_objective: " << format_double(fit.report.objective_trace.back())
              << "\n";
}

// Runs fn(i) for i in [0, count) on opts.workers threads; each call must be
// independent and write only to its own slot.
void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int n_threads = std::min(workers, count);
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

int run_estimate(const EstimateOpts& opts) {
  io::LabeledRows data;
  TuningGrid grid;
  const bool use_grid = !opts.grid_file.empty();
  try {
    data = io::read_csv(opts.input, opts.label_col, opts.header);
    if (data.labels.empty()) {
      std::cerr << "estimate: input has no label column\n";
      return kParseError;
    }
    if (use_grid) grid = io::read_grid(opts.grid_file);
  } catch (const std::exception& e) {
    std::cerr << "estimate: " << e.what() << "\n";
    return kParseError;
  }

  std::vector<int> class_labels;
  ClassDataset dataset;
  try {
    dataset = ClassDataset::from_rows(data.rows, data.labels, &class_labels);
  } catch (const std::exception& e) {
    std::cerr << "estimate: " << e.what() << "\n";
    return kDegenerateClass;
  }

  Method method;
  PenaltyConfig cfg;
  cfg.lambda1 = opts.lambda1;
  cfg.lambda2 = opts.lambda2;
  cfg.num_clusters = opts.q;
  try {
    method = method_from_string(opts.method);
    if (use_grid) {
      grid.folds = opts.folds;
      grid.rng_seed = opts.common.seed;
      const CvResult cv = cv_select(data.rows, data.labels, grid, method, cfg);
      cfg = cv.best;
      std::cout << "selected: lambda1=" << format_double(cfg.lambda1)
                << " lambda2=" << format_double(cfg.lambda2) << " q=" << cfg.num_clusters
                << "\n";
    }
    cfg.validate(dataset.num_classes());
  } catch (const std::exception& e) {
    std::cerr << "estimate: " << e.what() << "\n";
    return kParamError;
  }

  FitResult fit;
  try {
    fit = fit_with_method(dataset, method, cfg, opts.common.seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "estimate: " << e.what() << "\n";
    return kDegenerateClass;
  }

  io::ModelFile model;
  model.p = dataset.p;
  model.class_labels = class_labels;
  model.method = opts.method;
  model.lambda1 = cfg.lambda1;
  model.lambda2 = cfg.lambda2;
  model.q = cfg.num_clusters;
  model.partition = fit.partition;
  model.log_priors = QdaModel::empirical_log_priors(dataset);
  for (const auto& stats : dataset.classes) model.mus.push_back(stats.mean);
  model.omegas = fit.omegas;
  model.converged = fit.report.converged;
  model.outer_rounds = fit.report.outer_rounds;
  model.objective_trace = fit.report.objective_trace;
  try {
    io::write_model(opts.output, model);
  } catch (const std::exception& e) {
    std::cerr << "estimate: " << e.what() << "\n";
    return kIoError;
  }
  print_fit_summary(fit, class_labels);
  if (!fit.report.converged) {
    std::cerr << "estimate: solver did not converge; model written anyway\n";
    return kNotConverged;
  }
  return kOk;
}

int run_simulate(const SimulateOpts& opts) {
  Scenario scenario;
  TuningGrid grid;
  grid.lambda1_values = {2.0, 10.0};
  grid.lambda2_values = {1.0, 10.0};
  grid.q_values = {2};
  try {
    scenario.name = scenario_from_string(opts.scenario);
    scenario.p = opts.p;
    scenario.n_per_class = opts.n;
    scenario.rho = opts.rho;
    if (opts.p < 2 || opts.n < 2 || opts.reps < 1) throw std::invalid_argument("bad size");
    if (!opts.grid_file.empty()) grid = io::read_grid(opts.grid_file);
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << "\n";
    return kParamError;
  }
  const bool classify = scenario.name == ScenarioName::qda_dense;

  struct Key {
    std::string method;
    double lambda1;
    double lambda2;
    std::string metric;
    bool operator<(const Key& o) const {
      return std::tie(method, lambda1, lambda2, metric) <
             std::tie(o.method, o.lambda1, o.lambda2, o.metric);
    }
  };
  std::vector<std::vector<std::pair<Key, double>>> per_rep(opts.reps);

  std::atomic<bool> failed{false};
  std::string failure;
  parallel_for(opts.reps, opts.common.workers, [&](int rep) {
    try {
      Scenario sc = scenario;
      sc.rng_seed = split_seed(opts.common.seed, rep);
      const ScenarioData sim = make_scenario(sc);

      Matrix rows(4 * sc.n_per_class, sc.p);
      std::vector<int> labels(4 * sc.n_per_class);
      for (int c = 0; c < 4; ++c) {
        rows.middleRows(c * sc.n_per_class, sc.n_per_class) = sim.rows_per_class[c];
        std::fill_n(labels.begin() + c * sc.n_per_class, sc.n_per_class, c);
      }
      const ClassDataset dataset = ClassDataset::from_rows(rows, labels);

      Matrix test_rows;
      std::vector<int> test_labels;
      if (classify) {
        const int n_test = 500;
        Rng rng(split_seed(sc.rng_seed, 9999));
        test_rows.resize(4 * n_test, sc.p);
        for (int c = 0; c < 4; ++c) {
          test_rows.middleRows(c * n_test, n_test) =
              mvn_sample(sim.truth.mus_true[c], sim.truth.omegas_true[c], n_test, rng);
          test_labels.insert(test_labels.end(), n_test, c);
        }
      }

      auto& rows_out = per_rep[rep];
      for (double lambda1 : grid.lambda1_values) {
        for (double lambda2 : grid.lambda2_values) {
          for (int q : grid.q_values) {
            for (const std::string& method_name : {std::string("crf"), std::string("pcen")}) {
              PenaltyConfig cfg;
              cfg.lambda1 = lambda1;
              cfg.lambda2 = lambda2;
              cfg.num_clusters = q;
              const FitResult fit = fit_with_method(
                  dataset, method_from_string(method_name), cfg, sc.rng_seed);
              rows_out.push_back({{method_name, lambda1, lambda2, "frob_error"},
                                  metric_frob_error(sim.truth.omegas_true, fit.omegas)});
              rows_out.push_back(
                  {{method_name, lambda1, lambda2, "stp"},
                   double(metric_stp(sim.truth.omegas_true, fit.omegas))});
              rows_out.push_back({{method_name, lambda1, lambda2, "tpr"},
                                  metric_tpr(sim.truth.omegas_true, fit.omegas)});
              if (classify) {
                QdaModel model;
                model.omegas = fit.omegas;
                for (const auto& stats : dataset.classes) model.mus.push_back(stats.mean);
                model.log_priors = QdaModel::empirical_log_priors(dataset);
                rows_out.push_back({{method_name, lambda1, lambda2, "error_rate"},
                                    classification_error(model, test_rows, test_labels)});
              }
            }
          }
        }
      }
      if (classify) {
        // true-covariance oracle: population precisions, sample means
        QdaModel tc;
        tc.omegas = sim.truth.omegas_true;
        for (const auto& stats : dataset.classes) tc.mus.push_back(stats.mean);
        tc.log_priors = QdaModel::empirical_log_priors(dataset);
        rows_out.push_back(
            {{"tc", 0.0, 0.0, "error_rate"}, classification_error(tc, test_rows, test_labels)});
      }
    } catch (const std::exception& e) {
      failed = true;
      failure = e.what();
    }
  });
  if (failed) {
    std::cerr << "simulate: " << failure << "\n";
    return kParamError;
  }

  std::vector<std::vector<std::string>> csv_rows;
  std::map<Key, std::pair<double, int>> sums;
  for (int rep = 0; rep < opts.reps; ++rep) {
    for (const auto& [key, value] : per_rep[rep]) {
      csv_rows.push_back({key.method, format_double(key.lambda1), format_double(key.lambda2),
                          std::to_string(rep), key.metric, format_double(value)});
      auto& acc = sums[key];
      acc.first += value;
      acc.second += 1;
    }
  }
  for (const auto& [key, acc] : sums)
    csv_rows.push_back({key.method, format_double(key.lambda1), format_double(key.lambda2),
                        "avg", key.metric, format_double(acc.first / acc.second)});

  try {
    io::write_csv(opts.output, {"method", "lambda1", "lambda2", "rep", "metric", "value"},
                  csv_rows);
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}

int run_tune(const TuneOpts& opts) {
  io::LabeledRows data;
  TuningGrid grid;
  try {
    data = io::read_csv(opts.input, opts.label_col, opts.header);
    grid = io::read_grid(opts.grid_file);
  } catch (const std::exception& e) {
    std::cerr << "tune: " << e.what() << "\n";
    return kParseError;
  }
  grid.folds = opts.folds;
  grid.rng_seed = opts.common.seed;

  CvResult cv;
  try {
    cv = cv_select(data.rows, data.labels, grid, method_from_string(opts.method));
  } catch (const std::exception& e) {
    std::cerr << "tune: " << e.what() << "\n";
    return kParamError;
  }

  std::vector<std::vector<std::string>> rows;
  for (const auto& row : cv.table)
    rows.push_back({format_double(row.lambda1), format_double(row.lambda2),
                    std::to_string(row.q), row.failed ? "nan" : format_double(row.score),
                    row.failed ? "1" : "0"});
  try {
    if (!opts.output.empty())
      io::write_csv(opts.output, {"lambda1", "lambda2", "q", "score", "failed"}, rows);
  } catch (const std::exception& e) {
    std::cerr << "tune: " << e.what() << "\n";
    return kIoError;
  }
  std::cout << "best: lambda1=" << format_double(cv.best.lambda1)
            << " lambda2=" << format_double(cv.best.lambda2) << " q=" << cv.best.num_clusters
            << " score=" << format_double(cv.best_score) << "\n";
  return kOk;
}

int run_qda_train(const QdaTrainOpts& opts) {
  EstimateOpts est;
  est.input = opts.input;
  est.output = opts.output;
  est.method = opts.method == "ridge" ? "crf" : opts.method;
  est.lambda1 = opts.lambda1;
  est.lambda2 = opts.method == "ridge" ? 0.0 : opts.lambda2;
  est.q = opts.method == "ridge" ? 1 : opts.q;
  est.grid_file = opts.grid_file;
  est.folds = opts.folds;
  est.label_col = opts.label_col;
  est.header = opts.header;
  est.common = opts.common;
  if (opts.method != "crf" && opts.method != "pcen" && opts.method != "ridge") {
    std::cerr << "qda train: unknown method " << opts.method << "\n";
    return kParamError;
  }
  return run_estimate(est);
}

int run_qda_predict(const QdaPredictOpts& opts) {
  io::ModelFile model;
  io::LabeledRows data;
  try {
    model = io::read_model(opts.model);
    data = io::read_csv(opts.input, opts.label_col, opts.header);
  } catch (const std::exception& e) {
    std::cerr << "qda predict: " << e.what() << "\n";
    return kParseError;
  }
  if (data.rows.cols() != model.p) {
    std::cerr << "qda predict: model expects p=" << model.p << " features, input has "
              << data.rows.cols() << "\n";
    return kDimMismatch;
  }

  QdaModel qda;
  qda.omegas = model.omegas;
  qda.mus = model.mus;
  qda.log_priors = model.log_priors;
  try {
    qda.validate();
  } catch (const std::exception& e) {
    std::cerr << "qda predict: " << e.what() << "\n";
    return kParseError;
  }

  const bool have_truth = !data.labels.empty();
  std::vector<std::vector<std::string>> rows;
  int wrong = 0;
  for (int i = 0; i < data.rows.rows(); ++i) {
    const QdaPrediction pred = qda_predict(qda, data.rows.row(i).transpose());
    const int predicted = model.class_labels[pred.label];
    std::vector<std::string> row{std::to_string(i), std::to_string(predicted)};
    if (have_truth) {
      row.push_back(std::to_string(data.labels[i]));
      if (predicted != data.labels[i]) ++wrong;
    }
    rows.push_back(std::move(row));
  }
  try {
    std::vector<std::string> header{"row", "predicted"};
    if (have_truth) header.push_back("truth");
    if (!opts.output.empty()) io::write_csv(opts.output, header, rows);
  } catch (const std::exception& e) {
    std::cerr << "qda predict: " << e.what() << "\n";
    return kIoError;
  }
  if (have_truth) {
    std::cout << "error_rate: "
              << format_double(static_cast<double>(wrong) / data.rows.rows()) << " (" << wrong
              << "/" << data.rows.rows() << ")\n";
  }
  return kOk;
}

}  // namespace clusterfuse::cli
