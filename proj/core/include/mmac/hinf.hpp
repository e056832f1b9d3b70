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

#ifndef MMAC_HINF_HPP
#define MMAC_HINF_HPP

#include "mmac/model_set.hpp"
#include "mmac/outcome.hpp"
#include "mmac/types.hpp"

#include <functional>
#include <vector>

namespace mmac {

/// Which conditions make a given attenuation level acceptable.
enum class FeasibilityCriterion {
  /// Full saddle-point conditions: I - M/gamma^2 > 0 on every iterate and
  /// M < gamma^2 I at the fixed point. This is the true H-infinity level.
  kCertified,
  /// Only require that the game Riccati recursion converges with a regular
  /// Lambda. Drops the spectral bound on M; yields the smaller thresholds
  /// found in published gamma* tables computed this way.
  kRecursionConverges,
};

struct RiccatiOptions {
  int max_iterations = 50000;
  double tolerance = 1e-11;  // relative change between iterates
  FeasibilityCriterion criterion = FeasibilityCriterion::kCertified;
};

/// Solution of the state-feedback dynamic game at level gamma.
struct HinfSolution {
  Matrix M;       // Riccati solution
  Matrix Lambda;  // I + (B R^-1 B' - gamma^-2 I) M
  Matrix K;       // u = -K x
  Matrix L;       // worst-case disturbance w = L x
  double gamma = 0.0;
  int iterations = 0;
  bool certified = false;  // all kCertified conditions hold
};

/// Iterates M <- Q + A' M Lambda^-1 A from M = Q, symmetrizing each iterate.
/// `observer`, when set, sees every iterate (used for monotonicity checks).
/// Throws PreconditionError on dimension mismatch or gamma <= 0.
Outcome<HinfSolution> solve_riccati(const Matrix& A, const Matrix& B, const Penalties& p,
                                    double gamma, const RiccatiOptions& options = {},
                                    const std::function<void(const Matrix&)>& observer = {});

struct AttenuationOptions {
  double relative_tolerance = 1e-5;
  double upper_bound = 1e6;
  RiccatiOptions riccati{};
};

/// Smallest gamma accepted by solve_riccati, by bisection. The returned
/// level is feasible; gamma * (1 - tol) is not. Throws BracketError if the
/// upper bound is already infeasible.
double optimal_attenuation(const Matrix& A, const Matrix& B, const Penalties& p,
                           const AttenuationOptions& options = {});

struct FrequencyPoint {
  double omega = 0.0;
  double norm = 0.0;
};

struct FrequencyScan {
  std::vector<FrequencyPoint> grid;  // sorted by omega, over [0, pi]
  double peak_omega = 0.0;
  double peak_norm = 0.0;
};

/// Largest singular value and its right singular vector of
/// [Q^1/2; R^1/2 K] (e^{j omega} I - A + B K)^-1.
struct FrequencyResponse {
  double norm = 0.0;
  Vector direction_real;  // unit complex right singular vector, real part
  Vector direction_imag;  // imaginary part
};

FrequencyResponse closed_loop_response(const Matrix& A, const Matrix& B, const Matrix& K,
                                       const Penalties& p, double omega);

/// Uniform grid over [0, pi] plus one golden-section refinement around the
/// grid peak. A refined point is inserted into `grid` only when it improves
/// on the grid maximum; ties keep the first grid occurrence.
/// Throws PreconditionError when A - BK is not Schur stable.
FrequencyScan closed_loop_scan(const Matrix& A, const Matrix& B, const Matrix& K,
                               const Penalties& p, int grid_size = 4096);

}  // namespace mmac

#endif  // MMAC_HINF_HPP
