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

#include "mmac/minimax_cert.hpp"

#include "mmac/errors.hpp"
#include "mmac/linalg.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace mmac {

namespace {

constexpr double kSymmetryTolerance = 1e-9;
constexpr double kMargin = 1e-10;

// (P^-1 - g^-2 I)^-1 evaluated as (I - P/g^2)^-1 P; empty when P >= g^2 I.
std::optional<Matrix> inflated(const Matrix& P, double gamma) {
  const auto n = P.rows();
  const Matrix shrink = Matrix::Identity(n, n) - P / (gamma * gamma);
  Eigen::LLT<Matrix> llt(shrink);
  if (llt.info() != Eigen::Success || linalg::min_eigenvalue(shrink) <= kMargin) return std::nullopt;
  return linalg::symmetrize(llt.solve(P));
}

struct TripleTerms {
  Matrix minus;  // (Abar_il - Abar_jl) / 2
  Matrix plus;   // (Abar_il + Abar_jl) / 2
};

TripleTerms triple_terms(const ModelSet& ms, const std::vector<Matrix>& gains, std::size_t i,
                         std::size_t j, std::size_t l) {
  const auto& mi = ms.models()[i];
  const auto& mj = ms.models()[j];
  const Matrix a_il = mi.A - mi.B * gains[l];
  const Matrix a_jl = mj.A - mj.B * gains[l];
  return {0.5 * (a_il - a_jl), 0.5 * (a_il + a_jl)};
}

// Right-hand side of the (i, j, l) inequality with W_ij = (P_ij^-1 - g^-2 I)^-1.
Matrix inequality_rhs(const ModelSet& ms, const Penalties& p, const std::vector<Matrix>& gains,
                      const Matrix& W_ij, double gamma, std::size_t i, std::size_t j,
                      std::size_t l) {
  const auto t = triple_terms(ms, gains, i, j, l);
  const Matrix& K = gains[l];
  return linalg::symmetrize(p.Q() + K.transpose() * p.R() * K -
                            gamma * gamma * t.minus.transpose() * t.minus +
                            t.plus.transpose() * W_ij * t.plus);
}

// A symmetric X with X >= Y for every Y in `ys`, built by folding in the PSD
// excess of each bound (largest trace first).
Matrix upper_bound(std::vector<Matrix> ys) {
  std::stable_sort(ys.begin(), ys.end(),
                   [](const Matrix& a, const Matrix& b) { return a.trace() > b.trace(); });
  Matrix x = ys.front();
  for (std::size_t k = 1; k < ys.size(); ++k) x += linalg::psd_part(ys[k] - x);
  return linalg::symmetrize(x);
}

}  // namespace

Matrix MinimaxCertificate::closed_loop(const ModelSet& ms, ModelIndex i, ModelIndex l) const {
  return ms[i].A - ms[i].B * gain(l);
}

void check_certificate(const ModelSet& ms, const MinimaxCertificate& cert) {
  const std::size_t F = ms.size();
  const auto n = ms.state_dim();
  if (!(cert.gamma_bar > 0.0) || !std::isfinite(cert.gamma_bar)) {
    throw PreconditionError("certificate gamma_bar must be positive");
  }
  if (cert.gains.size() != F || cert.values.size() != F) {
    throw PreconditionError("certificate has " + std::to_string(cert.gains.size()) +
                            " gains for a set of " + std::to_string(F) + " models");
  }
  for (const auto& K : cert.gains) {
    if (K.rows() != ms.input_dim() || K.cols() != n) throw PreconditionError("gain must be m x n");
  }
  const double g2 = cert.gamma_bar * cert.gamma_bar;
  for (std::size_t i = 0; i < F; ++i) {
    if (cert.values[i].size() != F) throw PreconditionError("value family must be F x F");
    for (std::size_t j = 0; j < F; ++j) {
      const Matrix& P = cert.values[i][j];
      const std::string tag = "P_" + std::to_string(i + 1) + std::to_string(j + 1);
      if (P.rows() != n || P.cols() != n) throw PreconditionError(tag + " must be n x n");
      if (linalg::asymmetry(P) > kSymmetryTolerance) throw PreconditionError(tag + " is not symmetric");
      if (linalg::min_eigenvalue(P) <= kMargin) throw PreconditionError(tag + " is not positive definite");
      if (linalg::max_eigenvalue(P) >= g2 - kMargin) throw PreconditionError(tag + " is not below gamma^2 I");
    }
  }
  for (std::size_t i = 0; i < F; ++i) {
    for (std::size_t j = i + 1; j < F; ++j) {
      if (linalg::max_abs(cert.values[i][j] - cert.values[j][i]) > kSymmetryTolerance) {
        throw PreconditionError("P_ij != P_ji for i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1));
      }
    }
  }
}

VerificationReport verify_certificate(const ModelSet& ms, const Penalties& p,
                                      const MinimaxCertificate& cert, double tol) {
  check_compatible(ms, p);
  check_certificate(ms, cert);
  const std::size_t F = ms.size();
  const double g = cert.gamma_bar;

  VerificationReport report;
  report.feasible = true;
  report.worst_violation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < F; ++i) {
    for (std::size_t j = 0; j < F; ++j) {
      const auto W = inflated(cert.values[i][j], g);
      for (std::size_t l = 0; l < F; ++l) {
        const std::array<ModelIndex, 3> triple{ModelIndex::from_offset(i), ModelIndex::from_offset(j),
                                               ModelIndex::from_offset(l)};
        if (!W) {
          report.feasible = false;
          report.worst_violation = -std::numeric_limits<double>::infinity();
          report.worst_triple = triple;
          report.note = "P_ij^-1 - gamma^-2 I singular";
          return report;
        }
        const Matrix slack = cert.values[i][l] - inequality_rhs(ms, p, cert.gains, *W, g, i, j, l);
        const double e = linalg::min_eigenvalue(slack);
        if (e < report.worst_violation) {
          report.worst_violation = e;
          report.worst_triple = triple;
        }
        if (e < -tol) report.feasible = false;
      }
    }
  }
  return report;
}

Outcome<MinimaxCertificate> synthesize_certificate(const ModelSet& ms, const Penalties& p,
                                                   double gamma, const SynthesisOptions& options) {
  check_compatible(ms, p);
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw PreconditionError("gamma must be positive");
  using Result = Outcome<MinimaxCertificate>;
  const std::size_t F = ms.size();

  MinimaxCertificate cert;
  cert.gamma_bar = gamma;
  for (std::size_t l = 0; l < F; ++l) {
    const auto& model = ms.models()[l];
    auto sol = solve_riccati(model.A, model.B, p, gamma, options.riccati);
    if (!sol) return Result::failure("no H-infinity gain for model " + std::to_string(l + 1) + ": " + sol.reason());
    cert.gains.push_back(sol.value().K);
  }

  cert.values.assign(F, std::vector<Matrix>(F, p.Q()));
  const auto W0 = inflated(p.Q(), gamma);
  if (!W0) return Result::failure("Q is not below gamma^2 I");
  std::vector<std::vector<Matrix>> W(F, std::vector<Matrix>(F, *W0));

  const double g2 = gamma * gamma;
  bool converged = false;
  for (int sweep = 1; sweep <= options.max_sweeps && !converged; ++sweep) {
    double change = 0.0;
    double scale = 1.0;
    for (std::size_t a = 0; a < F; ++a) {
      for (std::size_t b = a; b < F; ++b) {
        // P_ab enters as P_il for (i, l) = (a, b) and, by symmetry, (b, a).
        std::vector<Matrix> bounds;
        bounds.reserve(2 * F);
        for (std::size_t j = 0; j < F; ++j) bounds.push_back(inequality_rhs(ms, p, cert.gains, W[a][j], gamma, a, j, b));
        if (a != b) {
          for (std::size_t j = 0; j < F; ++j) bounds.push_back(inequality_rhs(ms, p, cert.gains, W[b][j], gamma, b, j, a));
        }
        Matrix next = upper_bound(std::move(bounds));
        if (!next.allFinite() || linalg::max_eigenvalue(next) >= g2 - kMargin) {
          return Result::failure("value matrix P_" + std::to_string(a + 1) + std::to_string(b + 1) +
                                 " reached gamma^2 I at sweep " + std::to_string(sweep));
        }
        auto w = inflated(next, gamma);
        if (!w) return Result::failure("P^-1 - gamma^-2 I singular at sweep " + std::to_string(sweep));
        change = std::max(change, linalg::max_abs(next - cert.values[a][b]));
        scale = std::max(scale, linalg::max_abs(next));
        cert.values[a][b] = next;
        cert.values[b][a] = std::move(next);
        W[a][b] = *w;
        W[b][a] = std::move(*w);
      }
    }
    converged = change <= options.tolerance * scale;
  }
  if (!converged) {
    return Result::failure("value iteration did not settle within " + std::to_string(options.max_sweeps) +
                           " sweeps");
  }
  try {
    check_certificate(ms, cert);
  } catch (const PreconditionError& e) {
    return Result::failure(std::string("certificate invariant violated: ") + e.what());
  }
  const auto report = verify_certificate(ms, p, cert, options.verify_tolerance);
  if (!report.feasible) {
    return Result::failure("verification failed, worst violation " + std::to_string(report.worst_violation));
  }
  return Result::success(std::move(cert));
}

GammaSearchResult minimal_feasible_gamma(const ModelSet& ms, const Penalties& p,
                                         const GammaSearchOptions& options) {
  check_compatible(ms, p);
  GammaSearchResult result;
  for (const auto& model : ms.models()) {
    result.gamma_stars.push_back(optimal_attenuation(model.A, model.B, p, options.attenuation));
  }
  double lo = *std::max_element(result.gamma_stars.begin(), result.gamma_stars.end());
  double hi = options.upper_bound;

  std::optional<MinimaxCertificate> best;
  auto attempt = [&](double g) {
    auto cert = synthesize_certificate(ms, p, g, options.synthesis);
    if (!cert) return false;
    best = std::move(cert).value();
    hi = g;
    return true;
  };

  // Doubling probe from the lower end keeps the bracket tight before bisecting.
  for (double g = 2.0 * lo; g < hi; g *= 2.0) {
    if (attempt(g)) break;
    lo = g;
  }
  if (!best && !attempt(hi)) {
    throw BracketError("no certificate at the upper bound gamma = " + std::to_string(options.upper_bound));
  }
  while (hi - lo > options.relative_tolerance * hi) {
    const double mid = hi > 2.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (!attempt(mid)) lo = mid;
  }
  result.gamma_bar = hi;
  result.certificate = std::move(*best);
  return result;
}

double value_bound(const MinimaxCertificate& cert, const Vector& x0) {
  double best = 0.0;
  for (const auto& row : cert.values) {
    for (const auto& P : row) {
      if (P.rows() != x0.size()) throw PreconditionError("x0 dimension does not match the certificate");
      best = std::max(best, linalg::quad(x0, P));
    }
  }
  return best;
}

}  // namespace mmac
