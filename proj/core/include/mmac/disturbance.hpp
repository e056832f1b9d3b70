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

#ifndef MMAC_DISTURBANCE_HPP
#define MMAC_DISTURBANCE_HPP

#include "mmac/hinf.hpp"
#include "mmac/model_set.hpp"
#include "mmac/types.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mmac {

/// Closed loop along which a feedback disturbance is generated before its
/// recorded sequence is replayed on the other controller.
enum class GeneratingLoop { kHinf, kMinimax, kOpen };

namespace disturbance {

struct Zero {};

struct HinfWorstCase {
  Matrix L;  // w = L x
};

struct Sinusoid {
  double amplitude = 1.0;
  double omega = 0.0;  // radians per step
  double phase = 0.0;
  Vector direction;    // unit norm
};

/// w_k = sum_f theta_f (A_f x_k + B_f u_k). An empty schedule means the
/// canonical choice theta_j = -1, theta_target = 1; a single entry is held
/// constant; otherwise entry k is used at step k.
struct Confusing {
  ModelSet models;
  ModelIndex true_model;
  ModelIndex target;
  std::vector<Vector> theta;
};

struct External {
  std::vector<Vector> sequence;
};

}  // namespace disturbance

/// A resolved disturbance strategy ready to emit w_k.
struct DisturbanceSpec {
  std::variant<disturbance::Zero, disturbance::HinfWorstCase, disturbance::Sinusoid,
               disturbance::Confusing, disturbance::External>
      strategy;
  GeneratingLoop loop = GeneratingLoop::kOpen;

  std::string kind_name() const;
};

DisturbanceSpec make_zero();
DisturbanceSpec make_hinf_worst_case(Matrix L);
/// Throws ValidationError unless `direction` has unit norm (1e-9).
DisturbanceSpec make_sinusoid(double amplitude, double omega, double phase, Vector direction);
/// Throws ValidationError when indices are out of range or equal, or a
/// theta entry has the wrong length.
DisturbanceSpec make_confusing(ModelSet models, ModelIndex true_model, ModelIndex target,
                               std::vector<Vector> theta = {});
DisturbanceSpec make_external(std::vector<Vector> sequence);

/// w = L x
Vector hinf_worst_case(const Matrix& L, const Vector& x);

/// w = (A_i - A_j) x + (B_i - B_j) u, so that the plant j lands exactly on
/// model i's prediction.
Vector confusing_disturbance(const ModelSet& ms, ModelIndex true_model, ModelIndex target,
                             const Vector& x, const Vector& u);

/// w = sum_f theta_f (A_f x + B_f u)
Vector general_confusing(const ModelSet& ms, const Vector& theta, const Vector& x, const Vector& u);

/// Unit sinusoid at the peak frequency of the closed loop A - BK, directed
/// along the realified peak right singular vector. The phase is pi/2 so the
/// sampled signal does not vanish when the peak sits at omega = 0 or pi.
DisturbanceSpec peak_sinusoid_spec(const Matrix& A, const Matrix& B, const Matrix& K,
                                   const Penalties& p, int grid_size = 4096);

/// Real unit vector closest to the complex direction vr + j vi: the real part
/// of e^{j phi} v with phi maximizing its norm, signed so the largest entry
/// is positive.
Vector realify_direction(const Vector& real, const Vector& imag);

Vector emit(const DisturbanceSpec& spec, int k, const Vector& x, const Vector& u);

/// Declarative disturbance choice as written in a config file; resolved into
/// a DisturbanceSpec once the comparator controller is known.
struct DisturbanceRequest {
  enum class Kind { kZero, kHinfWorstCase, kSinusoid, kPeakSinusoid, kConfusing, kExternal };

  Kind kind = Kind::kZero;
  double amplitude = 1.0;
  double omega = 0.0;
  std::optional<double> phase;
  std::optional<Vector> direction;
  ModelIndex target{1};
  std::vector<Vector> theta;
  std::vector<Vector> sequence;
  std::string sequence_file;  // provenance of `sequence`, kept for round trips
};

std::string to_string(DisturbanceRequest::Kind kind);
DisturbanceRequest::Kind disturbance_kind_from_string(const std::string& name);

/// `comparator` is the H-infinity solution of the true model at the
/// experiment level; it provides L* and the loop used for peak search.
DisturbanceSpec resolve_disturbance(const DisturbanceRequest& request, const ModelSet& ms,
                                    ModelIndex true_model, const Penalties& p,
                                    const HinfSolution& comparator);

}  // namespace mmac

#endif  // MMAC_DISTURBANCE_HPP
