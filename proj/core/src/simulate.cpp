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

#include "mmac/simulate.hpp"

#include "mmac/errors.hpp"
#include "mmac/linalg.hpp"
#include "mmac/policies.hpp"

#include <cmath>
#include <string>

namespace mmac {

RolloutSetup RolloutSetup::from(const ExperimentConfig& cfg) {
  return {cfg.model_set, cfg.penalties, cfg.true_model, cfg.x0, cfg.horizon};
}

Trajectory rollout(const RolloutSetup& setup, const Controller& controller, const DisturbanceSource& source) {
  const auto& ms = setup.models;
  const auto& plant = ms[setup.true_model];
  const auto n = ms.state_dim();
  if (setup.x0.size() != n) throw PreconditionError("x0 dimension does not match the model set");
  if (setup.horizon < 0) throw PreconditionError("horizon must be nonnegative");

  const auto* minimax = std::get_if<MinimaxController>(&controller);
  const auto* hinf = std::get_if<HinfController>(&controller);
  if (minimax && minimax->certificate.size() != ms.size()) {
    throw PreconditionError("certificate does not match the model set");
  }
  if (hinf && (hinf->K.rows() != ms.input_dim() || hinf->K.cols() != n)) {
    throw PreconditionError("H-infinity gain must be m x n");
  }
  if (const auto* recorded = std::get_if<RecordedSequence>(&source);
      recorded && recorded->size() < static_cast<std::size_t>(setup.horizon)) {
    throw PreconditionError("recorded disturbance shorter than the horizon");
  }

  const auto T = static_cast<std::size_t>(setup.horizon);
  Trajectory traj;
  traj.true_model = setup.true_model;
  traj.x.reserve(T + 1);
  traj.u.reserve(T);
  traj.w.reserve(T);
  traj.step_cost.reserve(T + 1);
  traj.x.push_back(setup.x0);

  std::optional<ControllerState> state;
  if (minimax) {
    state = initial_controller_state(ms.size());
    traj.selected.emplace();
    traj.alpha.emplace();
    traj.selected->reserve(T);
    traj.alpha->reserve(T + 1);
    traj.alpha->push_back(state->alpha);
  }

  for (std::size_t k = 0; k < T; ++k) {
    const Vector& x = traj.x.back();
    Vector u;
    if (minimax) {
      auto [input, next] = minimax_step(minimax->certificate, *state, x);
      u = std::move(input);
      state = std::move(next);
      traj.selected->push_back(state->current);
    } else {
      u = hinf_step(hinf->K, x);
    }

    Vector w = std::visit(
        [&](const auto& s) -> Vector {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, RecordedSequence>) {
            return s[k];
          } else {
            return emit(s, static_cast<int>(k), x, u);
          }
        },
        source);
    if (w.size() != n) throw PreconditionError("disturbance has the wrong dimension");

    Vector x_next = plant.A * x + plant.B * u + w;
    if (!x_next.allFinite() || x_next.norm() > kDivergenceThreshold) {
      throw DivergenceError("rollout diverged at step " + std::to_string(k + 1));
    }
    if (minimax) {
      *state = update_residuals(ms, *state, x, u, x_next);
      traj.alpha->push_back(state->alpha);
    }
    traj.step_cost.push_back(setup.penalties.stage_cost(x, u));
    traj.u.push_back(std::move(u));
    traj.w.push_back(std::move(w));
    traj.x.push_back(std::move(x_next));
  }
  traj.step_cost.push_back(linalg::quad(traj.x.back(), setup.penalties.Q()));
  return traj;
}

double accumulated_cost(const Trajectory& traj, const Penalties& p, double gamma) {
  const double g2 = gamma * gamma;
  double total = 0.0;
  for (std::size_t k = 0; k < traj.u.size(); ++k) {
    total += p.stage_cost(traj.x[k], traj.u[k]) - g2 * traj.w[k].squaredNorm();
  }
  return total + linalg::quad(traj.x.back(), p.Q());
}

double empirical_l2_gain(const Trajectory& traj, const Penalties& p) {
  if (traj.x.front().norm() != 0.0) throw PreconditionError("l2 gain needs a zero initial state");
  double energy = 0.0;
  for (const auto& w : traj.w) energy += w.squaredNorm();
  if (energy <= 1e-12) throw PreconditionError("l2 gain undefined for a zero-energy disturbance");
  return std::sqrt(accumulated_cost(traj, p, 0.0) / energy);
}

double dynamics_residual(const Trajectory& traj, const ModelSet& ms) {
  const auto& plant = ms[traj.true_model];
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.u.size(); ++k) {
    const Vector r = traj.x[k + 1] - plant.A * traj.x[k] - plant.B * traj.u[k] - traj.w[k];
    worst = std::max(worst, r.cwiseAbs().maxCoeff());
  }
  return worst;
}

PairedRollout run_paired(const RolloutSetup& setup, const MinimaxCertificate& cert, const Matrix& comparator_gain,
                         const DisturbanceSpec& spec) {
  const Controller minimax = MinimaxController{cert};
  const Controller hinf = HinfController{comparator_gain};
  PairedRollout pair{Trajectory{}, Trajectory{}};
  if (spec.loop == GeneratingLoop::kHinf) {
    pair.hinf = rollout(setup, hinf, spec);
    pair.minimax = rollout(setup, minimax, RecordedSequence(pair.hinf.w));
  } else {
    pair.minimax = rollout(setup, minimax, spec);
    pair.hinf = rollout(setup, hinf, RecordedSequence(pair.minimax.w));
  }
  return pair;
}

}  // namespace mmac
