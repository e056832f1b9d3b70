/*
 Copyright 2026 The mmac Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "mmac/config.hpp"
#include "mmac/errors.hpp"
#include "mmac/io.hpp"
#include "mmac/linalg.hpp"

#include <json.hpp>

#include <cmath>

namespace mmac {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing '" + key + "'");
  return obj.at(key);
}

double to_double(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

int to_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<int>();
}

// Row-major list of rows; a bare number is read as a 1x1 matrix.
Matrix to_matrix(const json& v, const std::string& where) {
  if (v.is_number()) return Matrix::Constant(1, 1, v.get<double>());
  if (!v.is_array() || v.empty()) throw ParseError(where + ": expected a non-empty list of rows");
  const auto rows = static_cast<Eigen::Index>(v.size());
  Eigen::Index cols = -1;
  Matrix out;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = v[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.empty()) throw ParseError(where + ": row " + std::to_string(r + 1) + " is not a list");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      out.resize(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError(where + ": ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) out(r, c) = to_double(row[static_cast<std::size_t>(c)], where);
  }
  return out;
}

Vector to_vector(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ParseError(where + ": expected a non-empty list");
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = to_double(v[i], where);
  return out;
}

std::vector<Vector> to_sequence(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected a list");
  std::vector<Vector> out;
  for (const auto& e : v) out.push_back(to_vector(e, where));
  return out;
}

json from_matrix(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json from_vector(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json from_sequence(const std::vector<Vector>& seq) {
  json out = json::array();
  for (const auto& v : seq) out.push_back(from_vector(v));
  return out;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

DisturbanceRequest parse_disturbance(const json& d, const std::filesystem::path& base_dir) {
  DisturbanceRequest req;
  if (!d.is_object()) throw ParseError("disturbance: expected an object");
  const auto& kind = require(d, "kind", "disturbance");
  if (!kind.is_string()) throw ParseError("disturbance.kind: expected a string");
  try {
    req.kind = disturbance_kind_from_string(kind.get<std::string>());
  } catch (const std::exception& e) {
    throw ValidationError(e.what());
  }
  if (d.contains("amplitude")) req.amplitude = to_double(d["amplitude"], "disturbance.amplitude");
  if (d.contains("omega")) req.omega = to_double(d["omega"], "disturbance.omega");
  if (d.contains("phase")) req.phase = to_double(d["phase"], "disturbance.phase");
  if (d.contains("direction")) req.direction = to_vector(d["direction"], "disturbance.direction");
  if (d.contains("target")) req.target = ModelIndex(to_int(d["target"], "disturbance.target"));
  if (d.contains("theta")) req.theta = to_sequence(d["theta"], "disturbance.theta");
  if (d.contains("file")) {
    if (!d["file"].is_string()) throw ParseError("disturbance.file: expected a string");
    req.sequence_file = d["file"].get<std::string>();
    std::filesystem::path file = req.sequence_file;
    if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
    req.sequence = io::load_disturbance_csv(file);
  } else if (d.contains("sequence")) {
    req.sequence = to_sequence(d["sequence"], "disturbance.sequence");
  }
  if (req.kind == DisturbanceRequest::Kind::kConfusing && !d.contains("target")) {
    throw ValidationError("confusing disturbance needs a target model");
  }
  if (req.kind == DisturbanceRequest::Kind::kExternal && !d.contains("file") && !d.contains("sequence")) {
    throw ValidationError("external disturbance needs a file or an inline sequence");
  }
  return req;
}

json dump_disturbance(const DisturbanceRequest& req) {
  json d;
  d["kind"] = to_string(req.kind);
  using Kind = DisturbanceRequest::Kind;
  if (req.kind == Kind::kSinusoid || req.kind == Kind::kPeakSinusoid) {
    d["amplitude"] = req.amplitude;
    if (req.kind == Kind::kSinusoid) d["omega"] = req.omega;
    if (req.phase) d["phase"] = *req.phase;
    if (req.direction) d["direction"] = from_vector(*req.direction);
  }
  if (req.kind == Kind::kConfusing) {
    d["target"] = req.target.one_based();
    if (!req.theta.empty()) d["theta"] = from_sequence(req.theta);
  }
  if (req.kind == Kind::kExternal) {
    // Inline the data so the dumped config is self-contained.
    d["sequence"] = from_sequence(req.sequence);
  }
  return d;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  check_compatible(cfg.model_set, cfg.penalties);
  const auto F = cfg.model_set.size();
  const auto n = cfg.model_set.state_dim();
  if (!cfg.model_set.contains(cfg.true_model)) {
    throw ValidationError("true model index " + to_string(cfg.true_model) + " outside 1.." + std::to_string(F));
  }
  if (cfg.x0.size() != n) throw ValidationError("x0 must have length " + std::to_string(n));
  if (!cfg.x0.allFinite()) throw ValidationError("x0 has non-finite entries");
  if (cfg.horizon < 1) throw ValidationError("horizon must be at least 1");
  if (cfg.gamma && !(std::isfinite(*cfg.gamma) && *cfg.gamma > 0.0)) {
    throw ValidationError("gamma must be positive and finite");
  }
  const auto& d = cfg.disturbance;
  using Kind = DisturbanceRequest::Kind;
  if (d.direction) {
    if (d.direction->size() != n) throw ValidationError("disturbance direction must have length " + std::to_string(n));
    if (std::abs(d.direction->norm() - 1.0) > 1e-9) throw ValidationError("disturbance direction must be unit norm");
  }
  if (d.kind == Kind::kConfusing) {
    if (!cfg.model_set.contains(d.target)) throw ValidationError("confusing target outside the model set");
    if (d.target == cfg.true_model) throw ValidationError("confusing target must differ from the true model");
    for (const auto& t : d.theta) {
      if (static_cast<std::size_t>(t.size()) != F) throw ValidationError("theta entries must have length F");
    }
  }
  if (d.kind == Kind::kExternal) {
    if (d.sequence.size() < static_cast<std::size_t>(cfg.horizon)) {
      throw ValidationError("external disturbance shorter than the horizon");
    }
    for (const auto& w : d.sequence) {
      if (w.size() != n) throw ValidationError("external disturbance entries must have length " + std::to_string(n));
    }
  }
  if (!std::isfinite(d.amplitude) || !std::isfinite(d.omega)) throw ValidationError("disturbance parameters must be finite");
  const auto& s = cfg.sublinearity;
  if (!(s.tail_fraction > 0.0 && s.tail_fraction <= 1.0)) throw ValidationError("regret.tail_fraction must lie in (0, 1]");
  if (!(s.peak_ratio_factor > 0.0 && std::isfinite(s.peak_ratio_factor))) {
    throw ValidationError("regret.peak_ratio_factor must be positive");
  }
}

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  const json root = parse_json(text, "config");
  if (!root.is_object()) throw ParseError("config: top level must be an object");

  const auto& models_json = require(root, "models", "config");
  if (!models_json.is_array()) throw ParseError("models: expected a list");
  std::vector<LinearModel> models;
  for (std::size_t i = 0; i < models_json.size(); ++i) {
    const std::string where = "models[" + std::to_string(i + 1) + "]";
    models.push_back({to_matrix(require(models_json[i], "A", where), where + ".A"),
                      to_matrix(require(models_json[i], "B", where), where + ".B")});
  }

  const auto& pen = require(root, "penalties", "config");
  const auto& exp = require(root, "experiment", "config");

  ModelSet ms(std::move(models));
  Penalties p(to_matrix(require(pen, "Q", "penalties"), "penalties.Q"),
              to_matrix(require(pen, "R", "penalties"), "penalties.R"));

  ExperimentConfig cfg{std::move(ms), std::move(p), ModelIndex(1), Vector{}, 0, std::nullopt, {}, {}};
  cfg.true_model = ModelIndex(to_int(require(exp, "j", "experiment"), "experiment.j"));
  cfg.horizon = to_int(require(exp, "T", "experiment"), "experiment.T");
  cfg.x0 = exp.contains("x0") ? to_vector(exp["x0"], "experiment.x0")
                              : Vector::Ones(cfg.model_set.state_dim());
  if (exp.contains("gamma") && !exp["gamma"].is_null()) cfg.gamma = to_double(exp["gamma"], "experiment.gamma");
  if (root.contains("disturbance")) cfg.disturbance = parse_disturbance(root["disturbance"], base_dir);
  if (root.contains("regret")) {
    const auto& r = root["regret"];
    if (!r.is_object()) throw ParseError("regret: expected an object");
    if (r.contains("tail_fraction")) cfg.sublinearity.tail_fraction = to_double(r["tail_fraction"], "regret.tail_fraction");
    if (r.contains("peak_ratio_factor")) {
      cfg.sublinearity.peak_ratio_factor = to_double(r["peak_ratio_factor"], "regret.peak_ratio_factor");
    }
  }

  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return parse_config(io::read_file(path), path.parent_path());
}

std::string dump_config(const ExperimentConfig& cfg) {
  json root;
  json models = json::array();
  for (const auto& m : cfg.model_set.models()) models.push_back({{"A", from_matrix(m.A)}, {"B", from_matrix(m.B)}});
  root["models"] = std::move(models);
  root["penalties"] = {{"Q", from_matrix(cfg.penalties.Q())}, {"R", from_matrix(cfg.penalties.R())}};
  json exp = {{"j", cfg.true_model.one_based()}, {"x0", from_vector(cfg.x0)}, {"T", cfg.horizon}};
  if (cfg.gamma) exp["gamma"] = *cfg.gamma;
  root["experiment"] = std::move(exp);
  root["disturbance"] = dump_disturbance(cfg.disturbance);
  root["regret"] = {{"tail_fraction", cfg.sublinearity.tail_fraction},
                    {"peak_ratio_factor", cfg.sublinearity.peak_ratio_factor}};
  return root.dump(2) + "\n";
}

void save_config(const ExperimentConfig& cfg, const std::filesystem::path& path) {
  io::write_file_atomic(path, dump_config(cfg));
}

namespace io {

namespace {
constexpr const char* kCertificateFormat = "mmac-certificate";
constexpr int kCertificateVersion = 1;
}  // namespace

std::string certificate_json(const MinimaxCertificate& cert) {
  json root;
  root["format"] = kCertificateFormat;
  root["version"] = kCertificateVersion;
  root["gamma_bar"] = cert.gamma_bar;
  root["model_count"] = cert.size();
  root["state_dim"] = cert.size() ? cert.gains.front().cols() : 0;
  root["input_dim"] = cert.size() ? cert.gains.front().rows() : 0;
  json gains = json::array();
  for (const auto& K : cert.gains) gains.push_back(from_matrix(K));
  root["gains"] = std::move(gains);
  json values = json::array();
  for (std::size_t i = 0; i < cert.size(); ++i) {
    for (std::size_t j = i; j < cert.size(); ++j) {
      values.push_back({{"i", i + 1}, {"j", j + 1}, {"P", from_matrix(cert.values[i][j])}});
    }
  }
  root["values"] = std::move(values);
  return root.dump(2) + "\n";
}

MinimaxCertificate parse_certificate(const std::string& text) {
  const json root = parse_json(text, "certificate");
  const std::string where = "certificate";
  const auto& format = require(root, "format", where);
  if (!format.is_string() || format.get<std::string>() != kCertificateFormat) {
    throw ParseError("certificate: unrecognised format");
  }
  if (to_int(require(root, "version", where), "certificate.version") != kCertificateVersion) {
    throw ParseError("certificate: unsupported version");
  }
  const int F = to_int(require(root, "model_count", where), "certificate.model_count");
  const int n = to_int(require(root, "state_dim", where), "certificate.state_dim");
  const int m = to_int(require(root, "input_dim", where), "certificate.input_dim");
  if (F < 1 || n < 1 || m < 1) throw ParseError("certificate: dimensions must be positive");

  MinimaxCertificate cert;
  cert.gamma_bar = to_double(require(root, "gamma_bar", where), "certificate.gamma_bar");
  const auto& gains = require(root, "gains", where);
  if (!gains.is_array() || gains.size() != static_cast<std::size_t>(F)) {
    throw ParseError("certificate: expected " + std::to_string(F) + " gains");
  }
  for (const auto& g : gains) {
    Matrix K = to_matrix(g, "certificate.gains");
    if (K.rows() != m || K.cols() != n) throw ParseError("certificate: gain has the wrong shape");
    cert.gains.push_back(std::move(K));
  }

  const auto Fs = static_cast<std::size_t>(F);
  cert.values.assign(Fs, std::vector<Matrix>(Fs));
  std::vector<std::vector<bool>> seen(Fs, std::vector<bool>(Fs, false));
  const auto& values = require(root, "values", where);
  if (!values.is_array()) throw ParseError("certificate.values: expected a list");
  for (const auto& e : values) {
    const int i = to_int(require(e, "i", "certificate.values"), "certificate.values.i");
    const int j = to_int(require(e, "j", "certificate.values"), "certificate.values.j");
    if (i < 1 || j < i || j > F) throw ParseError("certificate.values: bad index pair");
    Matrix P = to_matrix(require(e, "P", "certificate.values"), "certificate.values.P");
    if (P.rows() != n || P.cols() != n) throw ParseError("certificate.values: P has the wrong shape");
    const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
    cert.values[a][b] = P;
    cert.values[b][a] = P;
    seen[a][b] = seen[b][a] = true;
  }
  for (std::size_t a = 0; a < Fs; ++a) {
    for (std::size_t b = 0; b < Fs; ++b) {
      if (!seen[a][b]) {
        throw ParseError("certificate: missing P_" + std::to_string(a + 1) + std::to_string(b + 1));
      }
    }
  }
  return cert;
}

MinimaxCertificate load_certificate(const std::filesystem::path& path) {
  return parse_certificate(read_file(path));
}

std::string hinf_solution_json(const HinfSolution& sol, ModelIndex model) {
  json root;
  root["model"] = model.one_based();
  root["gamma"] = sol.gamma;
  root["certified"] = sol.certified;
  root["iterations"] = sol.iterations;
  root["K"] = from_matrix(sol.K);
  root["L"] = from_matrix(sol.L);
  root["M"] = from_matrix(sol.M);
  return root.dump(2) + "\n";
}

}  // namespace io

}  // namespace mmac
