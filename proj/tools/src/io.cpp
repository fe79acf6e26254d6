#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace clusterfuse::io {

using nlohmann::json;

LabeledRows read_csv(const std::string& path, int label_col, bool has_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);

  std::vector<std::vector<double>> table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first && has_header) {
      first = false;
      continue;
    }
    first = false;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t pos = 0;
      double v;
      try {
        v = std::stod(cell, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("CSV parse failure: non-numeric cell '" + cell + "'");
      }
      row.push_back(v);
    }
    if (!table.empty() && row.size() != table.front().size())
      throw std::invalid_argument("CSV parse failure: ragged rows");
    table.push_back(std::move(row));
  }
  if (table.empty()) throw std::invalid_argument("CSV parse failure: no data rows");

  const int ncol = static_cast<int>(table.front().size());
  int lc = label_col;
  if (lc == -1) lc = ncol - 1;
  if (lc != -2 && (lc < 0 || lc >= ncol))
    throw std::invalid_argument("label column out of range");

  LabeledRows out;
  const int p = lc == -2 ? ncol : ncol - 1;
  out.rows.resize(table.size(), p);
  for (std::size_t i = 0; i < table.size(); ++i) {
    int k = 0;
    for (int j = 0; j < ncol; ++j) {
      if (j == lc) {
        out.labels.push_back(static_cast<int>(std::lround(table[i][j])));
      } else {
        out.rows(i, k++) = table[i][j];
      }
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));  // row-major
  return out;
}

Matrix matrix_from_json(const json& arr, int rows, int cols) {
  Matrix m(rows, cols);
  int k = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = arr.at(k++).get<double>();
  return m;
}

}  // namespace

void write_model(const std::string& path, const ModelFile& model) {
  json j;
  j["schema_version"] = model.schema_version;
  j["p"] = model.p;
  j["C"] = static_cast<int>(model.omegas.size());
  j["classes"] = model.class_labels;
  j["method"] = model.method;
  j["lambda1"] = model.lambda1;
  j["lambda2"] = model.lambda2;
  j["q"] = model.q;
  j["partition"] = model.partition.assignment;
  j["log_priors"] = model.log_priors;
  json mus = json::array();
  for (const auto& mu : model.mus) {
    json v = json::array();
    for (int i = 0; i < mu.size(); ++i) v.push_back(mu[i]);
    mus.push_back(v);
  }
  j["mus"] = mus;
  json omegas = json::array();
  for (const auto& omega : model.omegas) omegas.push_back(matrix_to_json(omega));
  j["omegas"] = omegas;
  j["diagnostics"] = {{"converged", model.converged},
                      {"outer_rounds", model.outer_rounds},
                      {"objective_trace", model.objective_trace}};

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failure: " + path);
}

ModelFile read_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("model parse failure: ") + e.what());
  }
  ModelFile model;
  model.schema_version = j.at("schema_version").get<int>();
  model.p = j.at("p").get<int>();
  const int C = j.at("C").get<int>();
  model.class_labels = j.at("classes").get<std::vector<int>>();
  model.method = j.at("method").get<std::string>();
  model.lambda1 = j.at("lambda1").get<double>();
  model.lambda2 = j.at("lambda2").get<double>();
  model.q = j.at("q").get<int>();
  model.partition.assignment = j.at("partition").get<std::vector<int>>();
  model.partition.num_blocks = model.q;
  model.log_priors = j.at("log_priors").get<std::vector<double>>();
  for (const auto& v : j.at("mus")) {
    Vector mu(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mu[i] = v.at(i).get<double>();
    model.mus.push_back(mu);
  }
  for (const auto& arr : j.at("omegas"))
    model.omegas.push_back(matrix_from_json(arr, model.p, model.p));
  if (static_cast<int>(model.omegas.size()) != C)
    throw std::invalid_argument("model parse failure: C does not match omegas");
  const auto& diag = j.at("diagnostics");
  model.converged = diag.at("converged").get<bool>();
  model.outer_rounds = diag.at("outer_rounds").get<int>();
  model.objective_trace = diag.at("objective_trace").get<std::vector<double>>();
  return model;
}

TuningGrid read_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open grid file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("grid parse failure: ") + e.what());
  }
  TuningGrid grid;
  grid.lambda1_values = j.at("lambda1").get<std::vector<double>>();
  grid.lambda2_values = j.at("lambda2").get<std::vector<double>>();
  grid.q_values = j.at("q").get<std::vector<int>>();
  return grid;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  for (std::size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 < header.size() ? "," : "\n");
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 < row.size() ? "," : "\n");
  if (!out) throw std::runtime_error("write failure: " + path);
}

}  // namespace clusterfuse::io
