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

#include "mmac/disturbance.hpp"

#include "mmac/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace mmac {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_xu(const ModelSet& ms, const Vector& x, const Vector& u) {
  if (x.size() != ms.state_dim() || u.size() != ms.input_dim()) {
    throw PreconditionError("state or input dimension does not match the model set");
  }
}

}  // namespace

std::string DisturbanceSpec::kind_name() const {
  return std::visit(Overloaded{[](const disturbance::Zero&) { return std::string("zero"); },
                               [](const disturbance::HinfWorstCase&) { return std::string("hinf_worst_case"); },
                               [](const disturbance::Sinusoid&) { return std::string("sinusoid"); },
                               [](const disturbance::Confusing&) { return std::string("confusing"); },
                               [](const disturbance::External&) { return std::string("external"); }},
                    strategy);
}

DisturbanceSpec make_zero() { return {disturbance::Zero{}, GeneratingLoop::kOpen}; }

DisturbanceSpec make_hinf_worst_case(Matrix L) {
  return {disturbance::HinfWorstCase{std::move(L)}, GeneratingLoop::kHinf};
}

DisturbanceSpec make_sinusoid(double amplitude, double omega, double phase, Vector direction) {
  if (direction.size() == 0 || std::abs(direction.norm() - 1.0) > 1e-9) {
    throw ValidationError("sinusoid direction must have unit norm");
  }
  if (!std::isfinite(amplitude) || !std::isfinite(omega) || !std::isfinite(phase)) {
    throw ValidationError("sinusoid parameters must be finite");
  }
  return {disturbance::Sinusoid{amplitude, omega, phase, std::move(direction)}, GeneratingLoop::kOpen};
}

DisturbanceSpec make_confusing(ModelSet models, ModelIndex true_model, ModelIndex target,
                               std::vector<Vector> theta) {
  if (!models.contains(true_model) || !models.contains(target)) {
    throw ValidationError("confusing disturbance indices outside the model set");
  }
  if (true_model == target) throw ValidationError("confusing target must differ from the true model");
  for (const auto& t : theta) {
    if (static_cast<std::size_t>(t.size()) != models.size()) {
      throw ValidationError("theta entries must have one weight per model");
    }
  }
  return {disturbance::Confusing{std::move(models), true_model, target, std::move(theta)},
          GeneratingLoop::kMinimax};
}

DisturbanceSpec make_external(std::vector<Vector> sequence) {
  return {disturbance::External{std::move(sequence)}, GeneratingLoop::kOpen};
}

Vector hinf_worst_case(const Matrix& L, const Vector& x) {
  if (L.cols() != x.size()) throw PreconditionError("L does not match the state dimension");
  return L * x;
}

Vector confusing_disturbance(const ModelSet& ms, ModelIndex true_model, ModelIndex target,
                             const Vector& x, const Vector& u) {
  if (true_model == target) throw PreconditionError("confusing target must differ from the true model");
  check_xu(ms, x, u);
  const auto& mi = ms[target];
  const auto& mj = ms[true_model];
  return (mi.A - mj.A) * x + (mi.B - mj.B) * u;
}

Vector general_confusing(const ModelSet& ms, const Vector& theta, const Vector& x, const Vector& u) {
  if (static_cast<std::size_t>(theta.size()) != ms.size()) {
    throw PreconditionError("theta must have one weight per model");
  }
  check_xu(ms, x, u);
  Vector w = Vector::Zero(x.size());
  for (std::size_t f = 0; f < ms.size(); ++f) {
    const auto& m = ms.models()[f];
    w += theta(static_cast<Eigen::Index>(f)) * (m.A * x + m.B * u);
  }
  return w;
}

Vector realify_direction(const Vector& real, const Vector& imag) {
  // Re(e^{j phi} v) = cos(phi) vr - sin(phi) vi = U c with U = [vr, -vi].
  Matrix U(real.size(), 2);
  U << real, -imag;
  const Matrix gram = U.transpose() * U;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram);
  Vector c = solver.eigenvectors().col(1);
  if (solver.eigenvalues()(1) - solver.eigenvalues()(0) <= 1e-12 * std::max(1.0, solver.eigenvalues()(1))) {
    c = Vector::Unit(2, real.norm() > 0.0 ? 0 : 1);
  }
  Vector d = U * c;
  const double norm = d.norm();
  if (norm == 0.0) throw PreconditionError("direction vector is zero");
  d /= norm;
  Eigen::Index largest = 0;
  d.cwiseAbs().maxCoeff(&largest);
  if (d(largest) < 0.0) d = -d;
  return d;
}

DisturbanceSpec peak_sinusoid_spec(const Matrix& A, const Matrix& B, const Matrix& K,
                                   const Penalties& p, int grid_size) {
  const auto scan = closed_loop_scan(A, B, K, p, grid_size);
  const auto response = closed_loop_response(A, B, K, p, scan.peak_omega);
  return make_sinusoid(1.0, scan.peak_omega, std::numbers::pi / 2.0,
                       realify_direction(response.direction_real, response.direction_imag));
}

Vector emit(const DisturbanceSpec& spec, int k, const Vector& x, const Vector& u) {
  if (k < 0) throw PreconditionError("negative time index");
  return std::visit(
      Overloaded{
          [&](const disturbance::Zero&) -> Vector { return Vector::Zero(x.size()); },
          [&](const disturbance::HinfWorstCase& s) -> Vector { return hinf_worst_case(s.L, x); },
          [&](const disturbance::Sinusoid& s) -> Vector {
            if (s.direction.size() != x.size()) throw PreconditionError("sinusoid direction has the wrong size");
            return s.amplitude * std::sin(s.omega * k + s.phase) * s.direction;
          },
          [&](const disturbance::Confusing& s) -> Vector {
            if (s.theta.empty()) return confusing_disturbance(s.models, s.true_model, s.target, x, u);
            if (s.theta.size() == 1) return general_confusing(s.models, s.theta.front(), x, u);
            if (static_cast<std::size_t>(k) >= s.theta.size()) {
              throw PreconditionError("theta schedule exhausted at step " + std::to_string(k));
            }
            return general_confusing(s.models, s.theta[static_cast<std::size_t>(k)], x, u);
          },
          [&](const disturbance::External& s) -> Vector {
            if (static_cast<std::size_t>(k) >= s.sequence.size()) {
              throw PreconditionError("external disturbance sequence exhausted at step " + std::to_string(k));
            }
            const Vector& w = s.sequence[static_cast<std::size_t>(k)];
            if (w.size() != x.size()) throw PreconditionError("external disturbance has the wrong size");
            return w;
          }},
      spec.strategy);
}

std::string to_string(DisturbanceRequest::Kind kind) {
  switch (kind) {
    case DisturbanceRequest::Kind::kZero: return "zero";
    case DisturbanceRequest::Kind::kHinfWorstCase: return "hinf_worst_case";
    case DisturbanceRequest::Kind::kSinusoid: return "sinusoid";
    case DisturbanceRequest::Kind::kPeakSinusoid: return "peak_sinusoid";
    case DisturbanceRequest::Kind::kConfusing: return "confusing";
    case DisturbanceRequest::Kind::kExternal: return "external";
  }
  return "unknown";
}

DisturbanceRequest::Kind disturbance_kind_from_string(const std::string& name) {
  using Kind = DisturbanceRequest::Kind;
  for (Kind k : {Kind::kZero, Kind::kHinfWorstCase, Kind::kSinusoid, Kind::kPeakSinusoid, Kind::kConfusing,
                 Kind::kExternal}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown disturbance kind '" + name + "'");
}

DisturbanceSpec resolve_disturbance(const DisturbanceRequest& request, const ModelSet& ms,
                                    ModelIndex true_model, const Penalties& p,
                                    const HinfSolution& comparator) {
  using Kind = DisturbanceRequest::Kind;
  const auto& plant = ms[true_model];
  switch (request.kind) {
    case Kind::kZero:
      return make_zero();
    case Kind::kHinfWorstCase:
      return make_hinf_worst_case(comparator.L);
    case Kind::kSinusoid: {
      Vector direction;
      if (request.direction) {
        direction = *request.direction;
      } else {
        const auto r = closed_loop_response(plant.A, plant.B, comparator.K, p, request.omega);
        direction = realify_direction(r.direction_real, r.direction_imag);
      }
      return make_sinusoid(request.amplitude, request.omega, request.phase.value_or(0.0), std::move(direction));
    }
    case Kind::kPeakSinusoid: {
      auto spec = peak_sinusoid_spec(plant.A, plant.B, comparator.K, p);
      auto& s = std::get<disturbance::Sinusoid>(spec.strategy);
      s.amplitude = request.amplitude;
      if (request.phase) s.phase = *request.phase;
      if (request.direction) {
        spec = make_sinusoid(s.amplitude, s.omega, s.phase, *request.direction);
      }
      return spec;
    }
    case Kind::kConfusing:
      return make_confusing(ms, true_model, request.target, request.theta);
    case Kind::kExternal:
      return make_external(request.sequence);
  }
  throw PreconditionError("unhandled disturbance kind");
}

}  // namespace mmac
