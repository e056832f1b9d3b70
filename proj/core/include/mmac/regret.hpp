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

#ifndef MMAC_REGRET_HPP
#define MMAC_REGRET_HPP

#include "mmac/model_set.hpp"
#include "mmac/regret_options.hpp"
#include "mmac/simulate.hpp"
#include "mmac/types.hpp"

#include <string>
#include <vector>

namespace mmac {

/// Regret of the switching controller against one hindsight comparator,
/// evaluated for a single disturbance strategy (a lower bound on the
/// worst case over all disturbances). Series are indexed k = 0..T.
struct RegretReport {
  std::vector<double> d;          // stepwise squared deviation
  std::vector<double> R;          // running sum of d
  std::vector<double> R_over_T;   // R(k)/k, NaN at k = 0
  std::vector<double> cost_diff;  // running sum of c(minimax) - c(hinf)
  ModelIndex model{1};
  std::string disturbance_kind;
};

/// d_k = ||x^A_k - x^B_k||_Q^2 + ||u^A_k - u^B_k||_R^2 (the input term is
/// absent at k = T). Throws PreconditionError when horizons differ or the
/// disturbance sequences disagree beyond 1e-12.
std::vector<double> stepwise_regret(const Trajectory& a, const Trajectory& b, const Penalties& p);

std::vector<double> model_based_regret(const std::vector<double>& d);

std::vector<double> cost_difference_regret(const Trajectory& a, const Trajectory& b, const Penalties& p);

RegretReport make_regret_report(const Trajectory& minimax, const Trajectory& hinf, const Penalties& p,
                                ModelIndex model, std::string disturbance_kind);

/// Pointwise max over the reports' R series. Throws PreconditionError on an
/// empty list or mismatched horizons.
std::vector<double> total_regret(const std::vector<RegretReport>& reports);

struct GapReport {
  std::vector<double> per_model;
  double minimal = 0.0;
  double maximal = 0.0;
  double gamma_bar = 0.0;
};

GapReport suboptimality_gaps(double gamma_bar, const std::vector<double>& gamma_stars);

struct SublinearityReport {
  std::vector<double> ratio;  // R(k)/k for k >= 1; ratio[0] is NaN
  double tail_slope = 0.0;    // least-squares slope of R over the tail
  bool tail_nonincreasing = false;
  bool consistent_with_sublinear = false;

  std::string verdict() const {
    return consistent_with_sublinear ? "consistent-with-sublinear" : "not-sublinear";
  }
};

/// Finite-horizon diagnostic: sublinear-consistent iff R(k)/k does not
/// increase over the tail and its final value is at most
/// peak_ratio_factor times its peak.
SublinearityReport sublinearity_diagnostic(const std::vector<double>& R, const SublinearityOptions& options = {});

}  // namespace mmac

#endif  // MMAC_REGRET_HPP
