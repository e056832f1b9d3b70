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

#include "mmac/errors.hpp"
#include "mmac/hinf.hpp"
#include "mmac/linalg.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace mmac {
namespace {

using testing::four_models;
namespace oracle = testing::oracle;

const LinearModel& model(int i) { return four_models().model_set[ModelIndex(i)]; }
const Penalties& pen() { return four_models().penalties; }

AttenuationOptions recursion_only() {
  AttenuationOptions o;
  o.riccati.criterion = FeasibilityCriterion::kRecursionConverges;
  return o;
}

TEST(OptimalAttenuation, CertifiedLevelsMatchSdpOracle) {
  for (int i = 1; i <= 4; ++i) {
    const double g = optimal_attenuation(model(i).A, model(i).B, pen());
    EXPECT_NEAR(g, oracle::kSdpGammaStar[static_cast<std::size_t>(i - 1)], 5e-5 * g) << "model " << i;
  }
}

TEST(OptimalAttenuation, RecursionCriterionMatchesPublishedTable) {
  const double published[] = {1.266, 4.544, 2.913, 2.298};
  for (int i = 1; i <= 4; ++i) {
    const double g = optimal_attenuation(model(i).A, model(i).B, pen(), recursion_only());
    EXPECT_NEAR(g, published[i - 1], 0.005) << "model " << i;
  }
}

TEST(OptimalAttenuation, BisectionBracketsThreshold) {
  for (int i = 1; i <= 4; ++i) {
    const double g = optimal_attenuation(model(i).A, model(i).B, pen());
    EXPECT_TRUE(solve_riccati(model(i).A, model(i).B, pen(), g).ok());
    EXPECT_FALSE(solve_riccati(model(i).A, model(i).B, pen(), g * (1 - 2e-5)).ok());
  }
}

TEST(OptimalAttenuation, ScalarIntegratorFreeSystem) {
  // x+ = 0.5 x + w with no input: the l2 gain is 1/(1 - 0.5) = 2.
  const Matrix A = Matrix::Constant(1, 1, 0.5);
  const Matrix B = Matrix::Zero(1, 1);
  const Penalties p(Matrix::Identity(1, 1), Matrix::Identity(1, 1));
  EXPECT_NEAR(optimal_attenuation(A, B, p), 2.0, 1e-3);
}

TEST(OptimalAttenuation, UnstabilizableHasNoBracket) {
  const Matrix A = Matrix::Constant(1, 1, 2.0);
  const Penalties p(Matrix::Identity(1, 1), Matrix::Identity(1, 1));
  EXPECT_THROW(optimal_attenuation(A, Matrix::Zero(1, 1), p), BracketError);
}

TEST(SolveRiccati, InfeasibleBelowThreshold) {
  // Model 2 under the certified criterion needs gamma above 9.43.
  EXPECT_FALSE(solve_riccati(model(2).A, model(2).B, pen(), 4.0).ok());
  EXPECT_FALSE(solve_riccati(model(2).A, model(2).B, pen(), 4.6).ok());
  RiccatiOptions loose;
  loose.criterion = FeasibilityCriterion::kRecursionConverges;
  EXPECT_FALSE(solve_riccati(model(2).A, model(2).B, pen(), 4.0, loose).ok());
  const auto relaxed = solve_riccati(model(2).A, model(2).B, pen(), 4.6, loose);
  ASSERT_TRUE(relaxed.ok());
  EXPECT_FALSE(relaxed->certified);
}

TEST(SolveRiccati, FeasibleSolutionBoundsClosedLoopNorm) {
  const auto sol = solve_riccati(model(2).A, model(2).B, pen(), 9.5);
  ASSERT_TRUE(sol.ok());
  EXPECT_TRUE(sol->certified);
  const auto scan = closed_loop_scan(model(2).A, model(2).B, sol->K, pen());
  EXPECT_LE(scan.peak_norm, 9.5);
}

TEST(SolveRiccati, SatisfiesStackedGameRiccati) {
  for (int i = 1; i <= 4; ++i) {
    const double g = 1.2 * oracle::kSdpGammaStar[static_cast<std::size_t>(i - 1)];
    const auto sol = solve_riccati(model(i).A, model(i).B, pen(), g);
    ASSERT_TRUE(sol.ok());
    EXPECT_LT(oracle::game_riccati_residual(model(i).A, model(i).B, pen().Q(), pen().R(), g, sol->M), 1e-9);
    EXPECT_GT(linalg::min_eigenvalue(g * g * Matrix::Identity(3, 3) - sol->M), 0.0);
    // Gains in the stacked form: [K; -L_w] = (Rt + G'MG)^-1 G'MA.
    const Matrix expected_L =
        sol->M * (Matrix::Identity(3, 3) + (model(i).B * model(i).B.transpose() - Matrix::Identity(3, 3) / (g * g)) *
                                               sol->M)
                     .inverse() *
        model(i).A / (g * g);
    EXPECT_LT((sol->L - expected_L).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(SolveRiccati, IteratesIncreaseMonotonically) {
  std::vector<Matrix> iterates;
  const auto sol = solve_riccati(model(1).A, model(1).B, pen(), 3.0, {},
                                 [&](const Matrix& M) { iterates.push_back(M); });
  ASSERT_TRUE(sol.ok());
  Matrix prev = pen().Q();
  for (const auto& M : iterates) {
    EXPECT_GE(linalg::min_eigenvalue(M - prev), -1e-9);
    prev = M;
  }
}

TEST(SolveRiccati, SolutionDecreasesWithGamma) {
  for (int i = 1; i <= 4; ++i) {
    const double g = oracle::kSdpGammaStar[static_cast<std::size_t>(i - 1)];
    const auto near = solve_riccati(model(i).A, model(i).B, pen(), 1.1 * g);
    const auto far = solve_riccati(model(i).A, model(i).B, pen(), 3.0 * g);
    ASSERT_TRUE(near.ok() && far.ok());
    EXPECT_GE(linalg::min_eigenvalue(near->M - far->M), -1e-9);
  }
}

TEST(SolveRiccati, LargeGammaRecoversLqr) {
  for (int i = 1; i <= 4; ++i) {
    const auto sol = solve_riccati(model(i).A, model(i).B, pen(), 1e6);
    ASSERT_TRUE(sol.ok());
    const Matrix P = oracle::dare_symplectic(model(i).A, model(i).B, pen().Q(), pen().R());
    const Matrix K = oracle::lqr_gain(model(i).A, model(i).B, pen().R(), P);
    EXPECT_LT((sol->K - K).cwiseAbs().maxCoeff(), 1e-6) << "model " << i;
  }
}

TEST(SolveRiccati, RejectsBadArguments) {
  EXPECT_THROW(solve_riccati(model(1).A, model(1).B, pen(), 0.0), PreconditionError);
  EXPECT_THROW(solve_riccati(model(1).A, Matrix::Ones(2, 1), pen(), 5.0), PreconditionError);
}

TEST(FrequencyScan, MatchesComplexOracle) {
  const auto sol = solve_riccati(model(3).A, model(3).B, pen(), 4.0);
  ASSERT_TRUE(sol.ok());
  const auto scan = closed_loop_scan(model(3).A, model(3).B, sol->K, pen(), 257);
  ASSERT_GE(scan.grid.size(), 257u);
  for (std::size_t k = 0; k < scan.grid.size(); k += 16) {
    const auto& pt = scan.grid[k];
    EXPECT_NEAR(pt.norm, oracle::closed_loop_gain(model(3).A, model(3).B, sol->K, pen().Q(), pen().R(), pt.omega),
                1e-10 * std::max(1.0, pt.norm));
  }
  // The refined peak should dominate a much finer oracle sweep.
  double fine = 0.0;
  for (int k = 0; k <= 20000; ++k) {
    fine = std::max(fine, oracle::closed_loop_gain(model(3).A, model(3).B, sol->K, pen().Q(), pen().R(),
                                                   std::numbers::pi * k / 20000.0));
  }
  EXPECT_GE(scan.peak_norm, fine * (1 - 1e-9));
  EXPECT_LE(scan.peak_norm, 4.0);
}

TEST(FrequencyScan, GridIsSortedAndPeakIsFirstMaximum) {
  const auto sol = solve_riccati(model(1).A, model(1).B, pen(), 3.0);
  ASSERT_TRUE(sol.ok());
  const auto scan = closed_loop_scan(model(1).A, model(1).B, sol->K, pen(), 512);
  for (std::size_t k = 1; k < scan.grid.size(); ++k) EXPECT_LT(scan.grid[k - 1].omega, scan.grid[k].omega);
  EXPECT_EQ(scan.grid.front().omega, 0.0);
  EXPECT_DOUBLE_EQ(scan.grid.back().omega, std::numbers::pi);
  for (const auto& pt : scan.grid) EXPECT_LE(pt.norm, scan.peak_norm);
}

TEST(FrequencyScan, ScalarPeakAtZeroFrequency) {
  const Matrix A = Matrix::Constant(1, 1, 0.5);
  const Matrix B = Matrix::Zero(1, 1);
  const Matrix K = Matrix::Zero(1, 1);
  const Penalties p(Matrix::Identity(1, 1), Matrix::Identity(1, 1));
  const auto scan = closed_loop_scan(A, B, K, p);
  EXPECT_NEAR(scan.peak_norm, 2.0, 1e-3);
  EXPECT_NEAR(scan.peak_omega, 0.0, 1e-6);
}

TEST(FrequencyScan, RequiresStableLoop) {
  EXPECT_THROW(closed_loop_scan(model(1).A, model(1).B, Matrix::Zero(1, 3), pen()), PreconditionError);
}

TEST(FrequencyResponse, DirectionIsUnit) {
  const auto sol = solve_riccati(model(4).A, model(4).B, pen(), 4.0);
  ASSERT_TRUE(sol.ok());
  const auto r = closed_loop_response(model(4).A, model(4).B, sol->K, pen(), 1.0);
  EXPECT_NEAR(r.direction_real.squaredNorm() + r.direction_imag.squaredNorm(), 1.0, 1e-12);
  EXPECT_NEAR(r.norm, oracle::closed_loop_gain(model(4).A, model(4).B, sol->K, pen().Q(), pen().R(), 1.0), 1e-10);
}

}  // namespace
}  // namespace mmac
