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

#include "mmac/regret.hpp"

#include "mmac/errors.hpp"
#include "mmac/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mmac {

namespace {

void check_comparable(const Trajectory& a, const Trajectory& b) {
  if (a.horizon() != b.horizon() || a.x.size() != b.x.size()) {
    throw PreconditionError("trajectories have different horizons");
  }
  for (std::size_t k = 0; k < a.w.size(); ++k) {
    if (a.w[k].size() != b.w[k].size() || (a.w[k] - b.w[k]).cwiseAbs().maxCoeff() > 1e-12) {
      throw PreconditionError("trajectories were driven by different disturbance sequences (step " +
                              std::to_string(k) + ")");
    }
  }
}

}  // namespace

std::vector<double> stepwise_regret(const Trajectory& a, const Trajectory& b, const Penalties& p) {
  check_comparable(a, b);
  std::vector<double> d(a.x.size());
  for (std::size_t k = 0; k < a.x.size(); ++k) {
    d[k] = linalg::quad(a.x[k] - b.x[k], p.Q());
    if (k < a.u.size()) d[k] += linalg::quad(a.u[k] - b.u[k], p.R());
  }
  return d;
}

std::vector<double> model_based_regret(const std::vector<double>& d) {
  std::vector<double> R(d.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) R[k] = (sum += d[k]);
  return R;
}

std::vector<double> cost_difference_regret(const Trajectory& a, const Trajectory& b, const Penalties& p) {
  check_comparable(a, b);
  std::vector<double> out(a.x.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < a.x.size(); ++k) {
    const Vector none;
    const double ca = p.stage_cost(a.x[k], k < a.u.size() ? a.u[k] : none);
    const double cb = p.stage_cost(b.x[k], k < b.u.size() ? b.u[k] : none);
    out[k] = (sum += ca - cb);
  }
  return out;
}

RegretReport make_regret_report(const Trajectory& minimax, const Trajectory& hinf, const Penalties& p,
                                ModelIndex model, std::string disturbance_kind) {
  RegretReport r;
  r.d = stepwise_regret(minimax, hinf, p);
  r.R = model_based_regret(r.d);
  r.R_over_T.resize(r.R.size());
  for (std::size_t k = 0; k < r.R.size(); ++k) {
    r.R_over_T[k] = k == 0 ? std::numeric_limits<double>::quiet_NaN() : r.R[k] / static_cast<double>(k);
  }
  r.cost_diff = cost_difference_regret(minimax, hinf, p);
  r.model = model;
  r.disturbance_kind = std::move(disturbance_kind);
  return r;
}

std::vector<double> total_regret(const std::vector<RegretReport>& reports) {
  if (reports.empty()) throw PreconditionError("total regret needs at least one report");
  std::vector<double> total = reports.front().R;
  for (const auto& r : reports) {
    if (r.R.size() != total.size()) throw PreconditionError("regret reports have different horizons");
    for (std::size_t k = 0; k < total.size(); ++k) total[k] = std::max(total[k], r.R[k]);
  }
  return total;
}

GapReport suboptimality_gaps(double gamma_bar, const std::vector<double>& gamma_stars) {
  if (gamma_stars.empty()) throw PreconditionError("gap report needs at least one model");
  if (!(gamma_bar > 0.0)) throw PreconditionError("gamma_bar must be positive");
  GapReport g;
  g.gamma_bar = gamma_bar;
  for (double s : gamma_stars) g.per_model.push_back(gamma_bar - s);
  g.minimal = gamma_bar - *std::max_element(gamma_stars.begin(), gamma_stars.end());
  g.maximal = gamma_bar - *std::min_element(gamma_stars.begin(), gamma_stars.end());
  return g;
}

SublinearityReport sublinearity_diagnostic(const std::vector<double>& R, const SublinearityOptions& options) {
  SublinearityReport rep;
  rep.ratio.assign(R.size(), std::numeric_limits<double>::quiet_NaN());
  if (R.size() < 3) return rep;
  for (std::size_t k = 1; k < R.size(); ++k) rep.ratio[k] = R[k] / static_cast<double>(k);

  const std::size_t last = R.size() - 1;
  const auto tail_len = static_cast<std::size_t>(std::ceil(options.tail_fraction * static_cast<double>(last)));
  const std::size_t start = std::max<std::size_t>(1, last - std::max<std::size_t>(tail_len, 1));

  // Least-squares slope of R(k) against k over the tail.
  double mean_k = 0.0, mean_r = 0.0;
  const auto count = static_cast<double>(last - start + 1);
  for (std::size_t k = start; k <= last; ++k) {
    mean_k += static_cast<double>(k);
    mean_r += R[k];
  }
  mean_k /= count;
  mean_r /= count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = start; k <= last; ++k) {
    sxy += (static_cast<double>(k) - mean_k) * (R[k] - mean_r);
    sxx += (static_cast<double>(k) - mean_k) * (static_cast<double>(k) - mean_k);
  }
  rep.tail_slope = sxx > 0.0 ? sxy / sxx : 0.0;

  const double peak = *std::max_element(rep.ratio.begin() + 1, rep.ratio.end());
  const double slack = 1e-12 * std::max(1.0, std::abs(peak));
  rep.tail_nonincreasing = true;
  for (std::size_t k = start; k < last; ++k) {
    if (rep.ratio[k + 1] > rep.ratio[k] + slack) rep.tail_nonincreasing = false;
  }
  rep.consistent_with_sublinear = rep.tail_nonincreasing && rep.ratio[last] <= options.peak_ratio_factor * peak;
  return rep;
}

}  // namespace mmac
