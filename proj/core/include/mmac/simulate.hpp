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

#ifndef MMAC_SIMULATE_HPP
#define MMAC_SIMULATE_HPP

#include "mmac/config.hpp"
#include "mmac/disturbance.hpp"
#include "mmac/minimax_cert.hpp"
#include "mmac/model_set.hpp"
#include "mmac/types.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace mmac {

/// One rollout of x_{k+1} = A_j x_k + B_j u_k + w_k for k = 0..T-1.
///
/// x and step_cost have T+1 entries (the last cost is the terminal Q-cost);
/// u, w and selected have T. alpha has T+1 entries: alpha[k] is the residual
/// vector the switching law saw at step k.
struct Trajectory {
  ModelIndex true_model{1};
  std::vector<Vector> x;
  std::vector<Vector> u;
  std::vector<Vector> w;
  std::optional<std::vector<ModelIndex>> selected;
  std::optional<std::vector<Vector>> alpha;
  std::vector<double> step_cost;

  int horizon() const { return static_cast<int>(u.size()); }
};

struct RolloutSetup {
  ModelSet models;
  Penalties penalties;
  ModelIndex true_model{1};
  Vector x0;
  int horizon = 0;

  static RolloutSetup from(const ExperimentConfig& cfg);
};

struct MinimaxController {
  MinimaxCertificate certificate;
};

struct HinfController {
  Matrix K;
};

using Controller = std::variant<MinimaxController, HinfController>;
using RecordedSequence = std::vector<Vector>;
using DisturbanceSource = std::variant<DisturbanceSpec, RecordedSequence>;

/// Norm of x beyond which a rollout is declared diverged.
inline constexpr double kDivergenceThreshold = 1e12;

/// Throws DivergenceError when ||x_k|| exceeds kDivergenceThreshold and
/// PreconditionError on inconsistent dimensions.
Trajectory rollout(const RolloutSetup& setup, const Controller& controller, const DisturbanceSource& source);

/// sum_{k<T} (c_k - gamma^2 ||w_k||^2) + ||x_T||_Q^2
double accumulated_cost(const Trajectory& traj, const Penalties& p, double gamma);

/// sqrt(sum c_k / sum ||w_k||^2); defined only for x0 = 0 and nonzero
/// disturbance energy, PreconditionError otherwise.
double empirical_l2_gain(const Trajectory& traj, const Penalties& p);

/// max_k ||x_{k+1} - A_j x_k - B_j u_k - w_k||_inf
double dynamics_residual(const Trajectory& traj, const ModelSet& ms);

/// Minimax and H-infinity rollouts driven by one shared disturbance
/// sequence: generated along the spec's loop, replayed verbatim on the other.
struct PairedRollout {
  Trajectory minimax;
  Trajectory hinf;
};

PairedRollout run_paired(const RolloutSetup& setup, const MinimaxCertificate& cert, const Matrix& comparator_gain,
                         const DisturbanceSpec& spec);

}  // namespace mmac

#endif  // MMAC_SIMULATE_HPP
