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

#ifndef MMAC_MODEL_SET_HPP
#define MMAC_MODEL_SET_HPP

#include "mmac/types.hpp"

#include <vector>

namespace mmac {

struct LinearModel {
  Matrix A;  // n x n
  Matrix B;  // n x m
};

/// Finite, ordered uncertainty set {(A_i, B_i)}. Immutable once built.
class ModelSet {
 public:
  /// Throws ValidationError when the list is empty or dimensions disagree.
  explicit ModelSet(std::vector<LinearModel> models);

  std::size_t size() const { return models_.size(); }
  int state_dim() const { return state_dim_; }
  int input_dim() const { return input_dim_; }

  const LinearModel& operator[](ModelIndex i) const;
  const std::vector<LinearModel>& models() const { return models_; }

  bool contains(ModelIndex i) const {
    return i.one_based() >= 1 && static_cast<std::size_t>(i.one_based()) <= models_.size();
  }

  /// Copy of model `i` as a one-element set.
  ModelSet subset(ModelIndex i) const;

 private:
  std::vector<LinearModel> models_;
  int state_dim_ = 0;
  int input_dim_ = 0;
};

/// State and input penalties of the quadratic stage cost. Both symmetric
/// positive definite; inputs with asymmetry above 1e-9 are rejected, smaller
/// asymmetry is removed by symmetrization.
class Penalties {
 public:
  Penalties(const Matrix& Q, const Matrix& R);

  const Matrix& Q() const { return Q_; }
  const Matrix& R() const { return R_; }

  /// ||x||_Q^2 + ||u||_R^2
  double stage_cost(const Vector& x, const Vector& u) const;

  static constexpr double kSymmetryTolerance = 1e-9;
  static constexpr double kDefinitenessTolerance = 1e-10;

 private:
  Matrix Q_;
  Matrix R_;
};

/// Throws ValidationError when Q/R sizes do not match the set's n/m.
void check_compatible(const ModelSet& ms, const Penalties& p);

struct StabilizabilityEntry {
  ModelIndex model;
  bool stabilizable = false;
  int iterations = 0;
};

struct LqrOptions {
  int max_iterations = 10000;
  double tolerance = 1e-10;  // relative change
};

/// Standard LQR Riccati fixed point P = Q + A'PA - A'PB (R + B'PB)^-1 B'PA
/// from P = Q. Returns the iteration count on convergence, -1 otherwise.
int lqr_riccati(const Matrix& A, const Matrix& B, const Penalties& p, Matrix& P,
                const LqrOptions& options = {});

/// u = -Kx gain for the converged LQR solution P.
Matrix lqr_gain(const Matrix& A, const Matrix& B, const Penalties& p, const Matrix& P);

/// Convergence of the LQR iteration certifies stabilizability (Q > 0).
std::vector<StabilizabilityEntry> validate_stabilizability(const ModelSet& ms, const Penalties& p,
                                                           const LqrOptions& options = {});

}  // namespace mmac

#endif  // MMAC_MODEL_SET_HPP
