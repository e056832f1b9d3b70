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

#include "mmac/model_set.hpp"

#include "mmac/errors.hpp"
#include "mmac/linalg.hpp"

#include <cmath>
#include <string>

namespace mmac {

ModelSet::ModelSet(std::vector<LinearModel> models) : models_(std::move(models)) {
  if (models_.empty()) throw ValidationError("model set must contain at least one model");
  state_dim_ = static_cast<int>(models_.front().A.rows());
  input_dim_ = static_cast<int>(models_.front().B.cols());
  if (state_dim_ == 0) throw ValidationError("state dimension must be positive");
  if (input_dim_ == 0) throw ValidationError("input dimension must be positive");
  for (std::size_t k = 0; k < models_.size(); ++k) {
    const auto& m = models_[k];
    const std::string tag = "model " + std::to_string(k + 1);
    if (m.A.rows() != state_dim_ || m.A.cols() != state_dim_) {
      throw ValidationError(tag + ": A must be " + std::to_string(state_dim_) + "x" +
                            std::to_string(state_dim_));
    }
    if (m.B.rows() != state_dim_ || m.B.cols() != input_dim_) {
      throw ValidationError(tag + ": B must be " + std::to_string(state_dim_) + "x" +
                            std::to_string(input_dim_));
    }
    if (!m.A.allFinite() || !m.B.allFinite()) throw ValidationError(tag + ": non-finite entry");
  }
}

const LinearModel& ModelSet::operator[](ModelIndex i) const {
  if (!contains(i)) {
    throw PreconditionError("model index " + to_string(i) + " outside [1, " +
                            std::to_string(models_.size()) + "]");
  }
  return models_[i.offset()];
}

ModelSet ModelSet::subset(ModelIndex i) const { return ModelSet({(*this)[i]}); }

namespace {

Matrix checked_spd(const Matrix& m, const char* name) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ValidationError(std::string(name) + " must be a non-empty square matrix");
  }
  if (!m.allFinite()) throw ValidationError(std::string(name) + " has non-finite entries");
  if (linalg::asymmetry(m) > Penalties::kSymmetryTolerance) {
    throw ValidationError(std::string(name) + " is not symmetric");
  }
  Matrix sym = linalg::symmetrize(m);
  if (linalg::min_eigenvalue(sym) <= Penalties::kDefinitenessTolerance) {
    throw ValidationError(std::string(name) + " is not positive definite");
  }
  return sym;
}

}  // namespace

Penalties::Penalties(const Matrix& Q, const Matrix& R)
    : Q_(checked_spd(Q, "Q")), R_(checked_spd(R, "R")) {}

double Penalties::stage_cost(const Vector& x, const Vector& u) const {
  return linalg::quad(x, Q_) + (u.size() == 0 ? 0.0 : linalg::quad(u, R_));
}

void check_compatible(const ModelSet& ms, const Penalties& p) {
  if (p.Q().rows() != ms.state_dim()) {
    throw ValidationError("Q must be " + std::to_string(ms.state_dim()) + "x" + std::to_string(ms.state_dim()));
  }
  if (p.R().rows() != ms.input_dim()) {
    throw ValidationError("R must be " + std::to_string(ms.input_dim()) + "x" + std::to_string(ms.input_dim()));
  }
}

int lqr_riccati(const Matrix& A, const Matrix& B, const Penalties& p, Matrix& P,
                const LqrOptions& options) {
  P = p.Q();
  for (int it = 1; it <= options.max_iterations; ++it) {
    const Matrix BtP = B.transpose() * P;
    const Matrix gain = (p.R() + BtP * B).ldlt().solve(BtP * A);
    Matrix next = linalg::symmetrize(p.Q() + A.transpose() * P * A - A.transpose() * BtP.transpose() * gain);
    if (!next.allFinite() || linalg::max_abs(next) > 1e14) return -1;
    const double change = linalg::max_abs(next - P);
    P = std::move(next);
    if (change <= options.tolerance * std::max(1.0, linalg::max_abs(P))) return it;
  }
  return -1;
}

Matrix lqr_gain(const Matrix& A, const Matrix& B, const Penalties& p, const Matrix& P) {
  const Matrix BtP = B.transpose() * P;
  return (p.R() + BtP * B).ldlt().solve(BtP * A);
}

std::vector<StabilizabilityEntry> validate_stabilizability(const ModelSet& ms, const Penalties& p,
                                                           const LqrOptions& options) {
  std::vector<StabilizabilityEntry> report;
  report.reserve(ms.size());
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const auto idx = ModelIndex::from_offset(k);
    Matrix P;
    const int iterations = lqr_riccati(ms[idx].A, ms[idx].B, p, P, options);
    report.push_back({idx, iterations > 0, iterations});
  }
  return report;
}

}  // namespace mmac
