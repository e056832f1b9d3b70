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

#ifndef MMAC_POLICIES_HPP
#define MMAC_POLICIES_HPP

#include "mmac/minimax_cert.hpp"
#include "mmac/model_set.hpp"
#include "mmac/types.hpp"

#include <utility>

namespace mmac {

/// Running state of the switching controller: alpha_i accumulates the
/// squared one-step prediction error of model i.
struct ControllerState {
  Vector alpha;
  ModelIndex current{1};
  int step = 0;
};

ControllerState initial_controller_state(std::size_t model_count);

/// Lowest index attaining min_i alpha_i.
ModelIndex select_model(const Vector& alpha);

/// u = -K_l x with l = select_model(alpha); the returned state records l.
std::pair<Vector, ControllerState> minimax_step(const MinimaxCertificate& cert,
                                                const ControllerState& state, const Vector& x);

/// alpha_i += ||x_next - A_i x - B_i u||^2 for every i; step += 1.
ControllerState update_residuals(const ModelSet& ms, const ControllerState& state, const Vector& x,
                                 const Vector& u, const Vector& x_next);

/// u = -K x
Vector hinf_step(const Matrix& K, const Vector& x);

}  // namespace mmac

#endif  // MMAC_POLICIES_HPP
