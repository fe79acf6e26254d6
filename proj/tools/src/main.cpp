#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "commands.hpp"

namespace cli = clusterfuse::cli;

namespace {

int default_workers() {
  if (const char* env = std::getenv("CLUSTERFUSE_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

void add_common(CLI::App* cmd, cli::CommonOpts& common) {
  cmd->add_option("--seed", common.seed, "RNG seed");
  cmd->add_option("--workers", common.workers, "worker threads")
      ->check(CLI::PositiveNumber);
}

void add_data_opts(CLI::App* cmd, std::string& input, int& label_col, bool& header) {
  cmd->add_option("--input", input, "input CSV")->required();
  cmd->add_option("--label-col", label_col,
                  "0-based label column; -1 last column, -2 none");
  cmd->add_flag("--header", header, "input CSV has a header row");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clusterfuse: joint precision matrix estimation with cluster fusion"};
  app.require_subcommand(1);

  cli::EstimateOpts est;
  est.common.workers = default_workers();
  auto* estimate = app.add_subcommand("estimate", "fit precision matrices from labeled data");
  add_data_opts(estimate, est.input, est.label_col, est.header);
  estimate->add_option("--output", est.output, "model JSON path")->required();
  estimate->add_option("--method", est.method, "crf | pcen");
  estimate->add_option("--lambda1", est.lambda1, "individual penalty weight");
  estimate->add_option("--lambda2", est.lambda2, "fusion penalty weight");
  estimate->add_option("--q", est.q, "number of clusters");
  estimate->add_option("--grid-file", est.grid_file, "tuning grid JSON (tune before fit)");
  estimate->add_option("--folds", est.folds, "CV folds when tuning");
  add_common(estimate, est.common);

  cli::SimulateOpts sim;
  sim.common.workers = default_workers();
  auto* simulate = app.add_subcommand("simulate", "run a simulation study");
  simulate->add_option("--scenario", sim.scenario,
                       "block_er | blockdiag_er | blockdiag_identity | qda_dense");
  simulate->add_option("--output", sim.output, "results CSV path")->required();
  simulate->add_option("--p", sim.p, "dimension");
  simulate->add_option("--n", sim.n, "observations per class");
  simulate->add_option("--reps", sim.reps, "replications");
  simulate->add_option("--rho", sim.rho, "tridiagonal correlation (qda_dense)");
  simulate->add_option("--grid-file", sim.grid_file, "penalty grid JSON");
  add_common(simulate, sim.common);

  cli::TuneOpts tune;
  tune.common.workers = default_workers();
  auto* tuner = app.add_subcommand("tune", "cross-validate a penalty grid");
  add_data_opts(tuner, tune.input, tune.label_col, tune.header);
  tuner->add_option("--output", tune.output, "score table CSV path");
  tuner->add_option("--method", tune.method, "crf | pcen");
  tuner->add_option("--grid-file", tune.grid_file, "tuning grid JSON")->required();
  tuner->add_option("--folds", tune.folds, "CV folds");
  add_common(tuner, tune.common);

  auto* qda = app.add_subcommand("qda", "quadratic discriminant analysis");
  qda->require_subcommand(1);

  cli::QdaTrainOpts train;
  train.common.workers = default_workers();
  auto* qtrain = qda->add_subcommand("train", "fit a QDA model");
  add_data_opts(qtrain, train.input, train.label_col, train.header);
  qtrain->add_option("--output", train.output, "model JSON path")->required();
  qtrain->add_option("--method", train.method, "crf | pcen | ridge");
  qtrain->add_option("--lambda1", train.lambda1, "individual penalty weight");
  qtrain->add_option("--lambda2", train.lambda2, "fusion penalty weight");
  qtrain->add_option("--q", train.q, "number of clusters");
  qtrain->add_option("--grid-file", train.grid_file, "tuning grid JSON");
  qtrain->add_option("--folds", train.folds, "CV folds when tuning");
  add_common(qtrain, train.common);

  cli::QdaPredictOpts pred;
  auto* qpredict = qda->add_subcommand("predict", "classify rows with a fitted model");
  qpredict->add_option("--model", pred.model, "model JSON path")->required();
  add_data_opts(qpredict, pred.input, pred.label_col, pred.header);
  qpredict->add_option("--output", pred.output, "predictions CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kParamError;
  }

  if (estimate->parsed()) return cli::run_estimate(est);
  if (simulate->parsed()) return cli::run_simulate(sim);
  if (tuner->parsed()) return cli::run_tune(tune);
  if (qtrain->parsed()) return cli::run_qda_train(train);
  if (qpredict->parsed()) return cli::run_qda_predict(pred);
  return cli::kParamError;
}
