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

#include "mmac/hinf.hpp"

#include "mmac/errors.hpp"
#include "mmac/linalg.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <string>

namespace mmac {

namespace {

constexpr double kMargin = 1e-10;
constexpr double kDivergence = 1e14;
constexpr double kSingularRcond = 1e-13;

void check_dims(const Matrix& A, const Matrix& B, const Penalties& p) {
  const auto n = A.rows();
  if (A.cols() != n || B.rows() != n) throw PreconditionError("A must be n x n and B n x m");
  if (p.Q().rows() != n) throw PreconditionError("Q does not match the state dimension");
  if (p.R().rows() != B.cols()) throw PreconditionError("R does not match the input dimension");
}

}  // namespace

Outcome<HinfSolution> solve_riccati(const Matrix& A, const Matrix& B, const Penalties& p,
                                    double gamma, const RiccatiOptions& options,
                                    const std::function<void(const Matrix&)>& observer) {
  check_dims(A, B, p);
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw PreconditionError("gamma must be positive");

  const auto n = A.rows();
  const bool certified = options.criterion == FeasibilityCriterion::kCertified;
  const Matrix I = Matrix::Identity(n, n);
  const double inv_g2 = 1.0 / (gamma * gamma);
  const Matrix coupling = B * p.R().ldlt().solve(B.transpose()) - inv_g2 * I;

  Matrix M = p.Q();
  bool converged = false;
  int it = 0;
  for (it = 1; it <= options.max_iterations; ++it) {
    if (certified && linalg::min_eigenvalue(I - inv_g2 * M) <= kMargin) {
      return Outcome<HinfSolution>::failure("I - M/gamma^2 lost definiteness at iteration " +
                                            std::to_string(it));
    }
    Eigen::PartialPivLU<Matrix> lu(I + coupling * M);
    if (lu.rcond() < kSingularRcond) {
      return Outcome<HinfSolution>::failure("Lambda singular at iteration " + std::to_string(it));
    }
    Matrix next = linalg::symmetrize(p.Q() + A.transpose() * M * lu.solve(A));
    if (!next.allFinite() || linalg::max_abs(next) > kDivergence) {
      return Outcome<HinfSolution>::failure("Riccati iteration diverged at iteration " +
                                            std::to_string(it));
    }
    if (observer) observer(next);
    const double change = linalg::max_abs(next - M);
    M = std::move(next);
    if (change <= options.tolerance * std::max(1.0, linalg::max_abs(M))) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    return Outcome<HinfSolution>::failure("no convergence within " +
                                          std::to_string(options.max_iterations) + " iterations");
  }

  const bool spectral_ok = linalg::max_eigenvalue(M) < gamma * gamma - kMargin &&
                           linalg::min_eigenvalue(I - inv_g2 * M) > kMargin;
  if (certified && !spectral_ok) {
    return Outcome<HinfSolution>::failure("fixed point violates M < gamma^2 I");
  }

  HinfSolution sol;
  sol.Lambda = I + coupling * M;
  Eigen::PartialPivLU<Matrix> lu(sol.Lambda);
  if (lu.rcond() < kSingularRcond) return Outcome<HinfSolution>::failure("Lambda singular at fixed point");
  const Matrix ML = M * lu.solve(A);
  sol.K = p.R().ldlt().solve(B.transpose() * ML);
  sol.L = inv_g2 * ML;
  sol.M = std::move(M);
  sol.gamma = gamma;
  sol.iterations = it;
  sol.certified = spectral_ok && linalg::min_eigenvalue(sol.M - p.Q()) >= -1e-8;
  return Outcome<HinfSolution>::success(std::move(sol));
}

double optimal_attenuation(const Matrix& A, const Matrix& B, const Penalties& p,
                           const AttenuationOptions& options) {
  check_dims(A, B, p);
  auto feasible = [&](double g) { return solve_riccati(A, B, p, g, options.riccati).ok(); };

  // M >= Q forces gamma^2 > lambda_max(Q); the lower end itself is never tested.
  double lo = std::sqrt(linalg::max_eigenvalue(p.Q()));
  double hi = options.upper_bound;
  if (!feasible(hi)) {
    throw BracketError("attenuation level " + std::to_string(hi) + " is infeasible");
  }
  while (hi - lo > options.relative_tolerance * hi) {
    const double mid = hi > 2.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

FrequencyResponse closed_loop_response(const Matrix& A, const Matrix& B, const Matrix& K,
                                       const Penalties& p, double omega) {
  const auto n = A.rows();
  const auto m = B.cols();
  const Matrix closed = A - B * K;

  // (zI - A + BK) realified as a 2n x 2n real system.
  const Matrix I = Matrix::Identity(n, n);
  Matrix pencil(2 * n, 2 * n);
  const Matrix re = std::cos(omega) * I - closed;
  const Matrix im = std::sin(omega) * I;
  pencil << re, -im, im, re;
  Matrix rhs = Matrix::Zero(2 * n, n);
  rhs.topRows(n) = I;
  const Matrix X = pencil.partialPivLu().solve(rhs);

  Matrix C(n + m, n);
  C << linalg::psd_sqrt(p.Q()), linalg::psd_sqrt(p.R()) * K;
  const Matrix Gr = C * X.topRows(n);
  const Matrix Gi = C * X.bottomRows(n);

  Matrix G(2 * (n + m), 2 * n);
  G << Gr, -Gi, Gi, Gr;
  Eigen::JacobiSVD<Matrix> svd(G, Eigen::ComputeThinV);

  FrequencyResponse r;
  r.norm = svd.singularValues()(0);
  r.direction_real = svd.matrixV().col(0).head(n);
  r.direction_imag = svd.matrixV().col(0).tail(n);
  return r;
}

FrequencyScan closed_loop_scan(const Matrix& A, const Matrix& B, const Matrix& K,
                               const Penalties& p, int grid_size) {
  check_dims(A, B, p);
  if (K.rows() != B.cols() || K.cols() != A.rows()) throw PreconditionError("K must be m x n");
  if (grid_size < 2) throw PreconditionError("grid needs at least two points");
  if (linalg::spectral_radius(A - B * K) >= 1.0 - 1e-9) {
    throw PreconditionError("A - BK is not Schur stable");
  }

  auto norm_at = [&](double w) { return closed_loop_response(A, B, K, p, w).norm; };

  FrequencyScan scan;
  scan.grid.reserve(static_cast<std::size_t>(grid_size) + 1);
  std::size_t peak = 0;
  for (int k = 0; k < grid_size; ++k) {
    const double w = std::numbers::pi * k / (grid_size - 1);
    scan.grid.push_back({w, norm_at(w)});
    if (scan.grid.back().norm > scan.grid[peak].norm) peak = scan.grid.size() - 1;
  }
  scan.peak_omega = scan.grid[peak].omega;
  scan.peak_norm = scan.grid[peak].norm;

  // Golden-section maximization on the bracket around the grid peak.
  const double step = std::numbers::pi / (grid_size - 1);
  double a = std::max(0.0, scan.peak_omega - step);
  double b = std::min(std::numbers::pi, scan.peak_omega + step);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = norm_at(c);
  double fd = norm_at(d);
  for (int it = 0; it < 80 && b - a > 1e-13; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = norm_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = norm_at(d);
    }
  }
  const double refined = 0.5 * (a + b);
  const double refined_norm = norm_at(refined);
  if (refined_norm > scan.peak_norm) {
    scan.peak_omega = refined;
    scan.peak_norm = refined_norm;
    auto pos = std::lower_bound(scan.grid.begin(), scan.grid.end(), refined,
                                [](const FrequencyPoint& pt, double w) { return pt.omega < w; });
    scan.grid.insert(pos, {refined, refined_norm});
  }
  return scan;
}

}  // namespace mmac
