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

#ifndef MMAC_TEST_SUPPORT_HPP
#define MMAC_TEST_SUPPORT_HPP

#include "mmac/config.hpp"
#include "mmac/minimax_cert.hpp"
#include "mmac/model_set.hpp"

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

namespace mmac::testing {

std::filesystem::path data_path(const std::string& name);

/// Four-model example shipped in tests/data (j = 2, T = 100, x0 = ones).
const ExperimentConfig& four_models();

/// Smallest-level certificate for four_models(), computed once per process.
const GammaSearchResult& four_models_search();

/// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& tag);

// Reference values the library is checked against. None of these reuse
// library code paths.
namespace oracle {

/// Certified per-model levels of the four-model example from a separate
/// bounded-real-lemma SDP solve (bisection tolerance about 1e-6).
inline const std::vector<double> kSdpGammaStar = {2.000476, 9.437806, 2.912569, 2.835263};

/// Stabilizing DARE solution from the stable invariant subspace of the
/// symplectic pencil. Requires an invertible A.
Matrix dare_symplectic(const Matrix& A, const Matrix& B, const Matrix& Q, const Matrix& R);

/// u = -Kx LQR gain from a DARE solution.
Matrix lqr_gain(const Matrix& A, const Matrix& B, const Matrix& R, const Matrix& P);

/// Residual of the game Riccati equation in its stacked-input form
///   M = Q + A'MA - A'M G (Rt + G'MG)^-1 G'MA,  G = [B I], Rt = diag(R, -g^2 I).
double game_riccati_residual(const Matrix& A, const Matrix& B, const Matrix& Q, const Matrix& R,
                             double gamma, const Matrix& M);

/// Largest singular value of [Q^1/2; R^1/2 K](zI - A + BK)^-1 at z = e^{j omega},
/// evaluated in complex arithmetic.
double closed_loop_gain(const Matrix& A, const Matrix& B, const Matrix& K, const Matrix& Q,
                        const Matrix& R, double omega);

/// Smallest eigenvalue over all triples of the certificate slack, with the
/// weighted term built from the variational identity
///   max_w ||y + w||_P^2 - g^2 ||w||^2 = y'(P + P (g^2 I - P)^-1 P) y.
double certificate_slack(const ModelSet& ms, const Matrix& Q, const Matrix& R, const MinimaxCertificate& cert);

}  // namespace oracle

}  // namespace mmac::testing

#endif  // MMAC_TEST_SUPPORT_HPP
