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

#ifndef MMAC_IO_HPP
#define MMAC_IO_HPP

#include "mmac/hinf.hpp"
#include "mmac/minimax_cert.hpp"
#include "mmac/regret.hpp"
#include "mmac/simulate.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace mmac::io {

// All text output uses 12 significant digits, '.' decimals and '\n' line
// ends so reruns are byte-identical. NaN prints as an empty field.
std::string format_number(double value);

/// Writes via a temporary sibling file and rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// Columns: k, x_1..x_n, u_1..u_m, w_1..w_n, l, step_cost. The final row
// (k = T) leaves u, w and l empty.
std::string trajectory_csv(const Trajectory& traj);

// Columns: k, alpha_1..alpha_F, l. Only for switching-controller
// trajectories; row k holds the residuals before the step-k decision.
std::string residuals_csv(const Trajectory& traj);

// Columns: T, d_T, R_T, R_over_T, cost_diff_T.
std::string regret_csv(const RegretReport& report);

// Columns: T, R_1..R_F, total.
std::string total_regret_csv(const std::vector<RegretReport>& reports, const std::vector<double>& total);

// Columns: model, gamma_star, gap.
std::string gaps_csv(const GapReport& gaps, const std::vector<double>& gamma_stars);

// Columns: omega, norm.
std::string scan_csv(const FrequencyScan& scan);

// Columns: k, w_1..w_n.
std::string disturbance_csv(const std::vector<Vector>& sequence);
/// Throws ParseError on malformed rows or non-consecutive k.
std::vector<Vector> parse_disturbance_csv(const std::string& text);
std::vector<Vector> load_disturbance_csv(const std::filesystem::path& path);

// Certificate: JSON with gamma_bar, row-major gains and the upper triangle
// (i <= j) of the value family.
std::string certificate_json(const MinimaxCertificate& cert);
/// Throws ParseError when the text is malformed or incomplete.
MinimaxCertificate parse_certificate(const std::string& text);
MinimaxCertificate load_certificate(const std::filesystem::path& path);

std::string hinf_solution_json(const HinfSolution& sol, ModelIndex model);

}  // namespace mmac::io

#endif  // MMAC_IO_HPP
