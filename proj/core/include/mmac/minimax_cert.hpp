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

#ifndef MMAC_MINIMAX_CERT_HPP
#define MMAC_MINIMAX_CERT_HPP

#include "mmac/hinf.hpp"
#include "mmac/model_set.hpp"
#include "mmac/outcome.hpp"
#include "mmac/types.hpp"

#include <array>
#include <string>
#include <vector>

namespace mmac {

/// Gain family {K_l} and value matrices {P_ij} certifying the switching
/// controller at level gamma_bar.
///
/// Invariants (see check_certificate): P_ij = P_ji and
/// 0 < P_ij < gamma_bar^2 I for all i, j.
struct MinimaxCertificate {
  std::vector<Matrix> gains;               // F entries, m x n
  std::vector<std::vector<Matrix>> values;  // F x F, n x n
  double gamma_bar = 0.0;

  std::size_t size() const { return gains.size(); }
  const Matrix& gain(ModelIndex l) const { return gains.at(l.offset()); }
  const Matrix& value(ModelIndex i, ModelIndex j) const { return values.at(i.offset()).at(j.offset()); }

  /// A_i - B_i K_l
  Matrix closed_loop(const ModelSet& ms, ModelIndex i, ModelIndex l) const;
};

/// Throws PreconditionError when `cert` is inconsistent with `ms` or
/// violates symmetry (1e-9) or the 0 < P < gamma^2 I margins (1e-10).
void check_certificate(const ModelSet& ms, const MinimaxCertificate& cert);

struct VerificationReport {
  bool feasible = false;
  double worst_violation = 0.0;  // most negative minimum eigenvalue seen
  std::array<ModelIndex, 3> worst_triple{};  // (i, j, l)
  std::string note;
};

/// Checks, for every triple (i, j, l), that
///   P_il - Q - K_l' R K_l + g^2 S-' S- - S+' (P_ij^-1 - g^-2 I)^-1 S+ >= -tol I
/// with S-+ = (Abar_il -+ Abar_jl) / 2.
VerificationReport verify_certificate(const ModelSet& ms, const Penalties& p,
                                      const MinimaxCertificate& cert, double tol = 1e-8);

struct SynthesisOptions {
  int max_sweeps = 20000;
  double tolerance = 1e-12;  // relative change per sweep
  double verify_tolerance = 1e-8;
  RiccatiOptions riccati{};
};

/// Fixes K_l to the per-model H-infinity gains at `gamma`, then iterates the
/// coupled inequalities taken as a matrix upper bound over all j until the
/// value family settles. Success implies verify_certificate passes.
Outcome<MinimaxCertificate> synthesize_certificate(const ModelSet& ms, const Penalties& p,
                                                   double gamma,
                                                   const SynthesisOptions& options = {});

struct GammaSearchOptions {
  double relative_tolerance = 1e-4;
  double upper_bound = 1e6;
  AttenuationOptions attenuation{};
  SynthesisOptions synthesis{};
};

struct GammaSearchResult {
  double gamma_bar = 0.0;
  MinimaxCertificate certificate;
  std::vector<double> gamma_stars;  // certified per-model levels
};

/// Bisects between max_i gamma*_i and the upper bound on synthesis
/// feasibility. Throws BracketError if the upper bound is infeasible.
GammaSearchResult minimal_feasible_gamma(const ModelSet& ms, const Penalties& p,
                                         const GammaSearchOptions& options = {});

/// max_ij x0' P_ij x0
double value_bound(const MinimaxCertificate& cert, const Vector& x0);

}  // namespace mmac

#endif  // MMAC_MINIMAX_CERT_HPP
