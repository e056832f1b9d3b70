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

#include "mmac/policies.hpp"

#include "mmac/errors.hpp"

namespace mmac {

ControllerState initial_controller_state(std::size_t model_count) {
  if (model_count == 0) throw PreconditionError("controller needs at least one model");
  return {Vector::Zero(static_cast<Eigen::Index>(model_count)), ModelIndex{1}, 0};
}

ModelIndex select_model(const Vector& alpha) {
  if (alpha.size() == 0) throw PreconditionError("empty residual vector");
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < alpha.size(); ++i) {
    if (alpha(i) < alpha(best)) best = i;
  }
  return ModelIndex::from_offset(static_cast<std::size_t>(best));
}

std::pair<Vector, ControllerState> minimax_step(const MinimaxCertificate& cert,
                                                const ControllerState& state, const Vector& x) {
  if (static_cast<std::size_t>(state.alpha.size()) != cert.size()) {
    throw PreconditionError("residual vector size does not match the certificate");
  }
  ControllerState next = state;
  next.current = select_model(state.alpha);
  const Matrix& K = cert.gain(next.current);
  if (K.cols() != x.size()) throw PreconditionError("state dimension does not match the gain");
  return {-(K * x), std::move(next)};
}

ControllerState update_residuals(const ModelSet& ms, const ControllerState& state, const Vector& x,
                                 const Vector& u, const Vector& x_next) {
  if (static_cast<std::size_t>(state.alpha.size()) != ms.size()) {
    throw PreconditionError("residual vector size does not match the model set");
  }
  ControllerState next = state;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& m = ms.models()[i];
    next.alpha(static_cast<Eigen::Index>(i)) += (x_next - m.A * x - m.B * u).squaredNorm();
  }
  ++next.step;
  return next;
}

Vector hinf_step(const Matrix& K, const Vector& x) {
  if (K.cols() != x.size()) throw PreconditionError("state dimension does not match the gain");
  return -(K * x);
}

}  // namespace mmac
