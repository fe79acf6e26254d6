#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clusterfuse::cli {

// Distinct exit codes per failure family; 0 is success.
enum ExitCode : int {
  kOk = 0,
  kParseError = 2,      // unreadable/malformed input
  kParamError = 3,      // invalid flag combination or value
  kDegenerateClass = 4, // a class unusable for fitting
  kNotConverged = 5,    // solver hit max_iter; outputs still written
  kIoError = 6,         // output write failure
  kDimMismatch = 7,     // model/data dimension disagreement
};

struct CommonOpts {
  std::uint64_t seed = 0;
  int workers = 1;
};

struct EstimateOpts {
  std::string input;
  std::string output;
  std::string method = "pcen";
  double lambda1 = 0.1;
  double lambda2 = 0.0;
  int q = 1;
  std::string grid_file;  // when set, tune first
  int folds = 5;
  int label_col = -1;
  bool header = false;
  CommonOpts common;
};

struct SimulateOpts {
  std::string scenario = "block_er";
  std::string output;
  int p = 20;
  int n = 200;
  int reps = 10;
  double rho = 0.45;
  std::string grid_file;
  CommonOpts common;
};

struct TuneOpts {
  std::string input;
  std::string output;
  std::string method = "pcen";
  std::string grid_file;
  int folds = 5;
  int label_col = -1;
  bool header = false;
  CommonOpts common;
};

struct QdaTrainOpts {
  std::string input;
  std::string output;
  std::string method = "crf";  // crf | pcen | ridge
  double lambda1 = 0.1;
  double lambda2 = 0.0;
  int q = 1;
  std::string grid_file;
  int folds = 5;
  int label_col = -1;
  bool header = false;
  CommonOpts common;
};

struct QdaPredictOpts {
  std::string model;
  std::string input;
  std::string output;
  int label_col = -1;  // -2: file has no truth column
  bool header = false;
};

int run_estimate(const EstimateOpts& opts);
int run_simulate(const SimulateOpts& opts);
int run_tune(const TuneOpts& opts);
int run_qda_train(const QdaTrainOpts& opts);
int run_qda_predict(const QdaPredictOpts& opts);

}  // namespace clusterfuse::cli
