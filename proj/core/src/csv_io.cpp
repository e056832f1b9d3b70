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

#include "mmac/errors.hpp"
#include "mmac/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mmac::io {

std::string format_number(double value) {
  if (std::isnan(value)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

void append_vector(std::string& line, const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    line += ',';
    line += format_number(v(i));
  }
}

void append_empty(std::string& line, Eigen::Index count) { line.append(static_cast<std::size_t>(count), ','); }

}  // namespace

std::string trajectory_csv(const Trajectory& traj) {
  const auto n = traj.x.front().size();
  const Eigen::Index m = traj.u.empty() ? 0 : traj.u.front().size();
  std::string out = "k";
  for (Eigen::Index i = 1; i <= n; ++i) out += ",x_" + std::to_string(i);
  for (Eigen::Index i = 1; i <= m; ++i) out += ",u_" + std::to_string(i);
  for (Eigen::Index i = 1; i <= n; ++i) out += ",w_" + std::to_string(i);
  out += ",l,step_cost\n";
  for (std::size_t k = 0; k < traj.x.size(); ++k) {
    std::string line = std::to_string(k);
    append_vector(line, traj.x[k]);
    if (k < traj.u.size()) {
      append_vector(line, traj.u[k]);
      append_vector(line, traj.w[k]);
    } else {
      append_empty(line, m + n);
    }
    line += ',';
    if (traj.selected && k < traj.selected->size()) line += std::to_string((*traj.selected)[k].one_based());
    line += ',' + format_number(traj.step_cost[k]) + '\n';
    out += line;
  }
  return out;
}

std::string residuals_csv(const Trajectory& traj) {
  if (!traj.alpha || !traj.selected) throw PreconditionError("trajectory has no residual record");
  const auto F = traj.alpha->front().size();
  std::string out = "k";
  for (Eigen::Index i = 1; i <= F; ++i) out += ",alpha_" + std::to_string(i);
  out += ",l\n";
  for (std::size_t k = 0; k < traj.alpha->size(); ++k) {
    std::string line = std::to_string(k);
    append_vector(line, (*traj.alpha)[k]);
    line += ',';
    if (k < traj.selected->size()) line += std::to_string((*traj.selected)[k].one_based());
    out += line + '\n';
  }
  return out;
}

std::string regret_csv(const RegretReport& report) {
  std::string out = "T,d_T,R_T,R_over_T,cost_diff_T\n";
  for (std::size_t k = 0; k < report.d.size(); ++k) {
    out += std::to_string(k) + ',' + format_number(report.d[k]) + ',' + format_number(report.R[k]) + ',' +
           format_number(report.R_over_T[k]) + ',' + format_number(report.cost_diff[k]) + '\n';
  }
  return out;
}

std::string total_regret_csv(const std::vector<RegretReport>& reports, const std::vector<double>& total) {
  std::string out = "T";
  for (const auto& r : reports) out += ",R_" + std::to_string(r.model.one_based());
  out += ",total\n";
  for (std::size_t k = 0; k < total.size(); ++k) {
    out += std::to_string(k);
    for (const auto& r : reports) out += ',' + format_number(r.R[k]);
    out += ',' + format_number(total[k]) + '\n';
  }
  return out;
}

std::string gaps_csv(const GapReport& gaps, const std::vector<double>& gamma_stars) {
  std::string out = "model,gamma_star,gap\n";
  for (std::size_t i = 0; i < gamma_stars.size(); ++i) {
    out += std::to_string(i + 1) + ',' + format_number(gamma_stars[i]) + ',' + format_number(gaps.per_model[i]) + '\n';
  }
  return out;
}

std::string scan_csv(const FrequencyScan& scan) {
  std::string out = "omega,norm\n";
  for (const auto& pt : scan.grid) out += format_number(pt.omega) + ',' + format_number(pt.norm) + '\n';
  return out;
}

std::string disturbance_csv(const std::vector<Vector>& sequence) {
  const Eigen::Index n = sequence.empty() ? 0 : sequence.front().size();
  std::string out = "k";
  for (Eigen::Index i = 1; i <= n; ++i) out += ",w_" + std::to_string(i);
  out += '\n';
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    std::string line = std::to_string(k);
    append_vector(line, sequence[k]);
    out += line + '\n';
  }
  return out;
}

std::vector<Vector> parse_disturbance_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind('k', 0) != 0) throw ParseError("disturbance CSV: missing header");
  std::vector<Vector> out;
  long expected_dim = -1;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        fields.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError("disturbance CSV: bad number '" + cell + "' on row " + std::to_string(row + 1));
      }
    }
    if (fields.size() < 2) throw ParseError("disturbance CSV: row " + std::to_string(row + 1) + " too short");
    if (fields[0] != static_cast<double>(row)) throw ParseError("disturbance CSV: k must count up from 0");
    const long dim = static_cast<long>(fields.size()) - 1;
    if (expected_dim >= 0 && dim != expected_dim) throw ParseError("disturbance CSV: ragged rows");
    expected_dim = dim;
    Vector w(dim);
    for (long i = 0; i < dim; ++i) w(i) = fields[static_cast<std::size_t>(i) + 1];
    out.push_back(std::move(w));
    ++row;
  }
  return out;
}

std::vector<Vector> load_disturbance_csv(const std::filesystem::path& path) {
  return parse_disturbance_csv(read_file(path));
}

}  // namespace mmac::io
