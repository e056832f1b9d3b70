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
#include "mmac/policies.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace mmac {
namespace {

TEST(SelectModel, LowestIndexWinsTies) {
  Vector a(4);
  a << 3.0, 1.0, 1.0, 2.0;
  EXPECT_EQ(select_model(a), ModelIndex(2));
  EXPECT_EQ(select_model(Vector::Zero(4)), ModelIndex(1));
}

TEST(SelectModel, InvariantToPositiveScaling) {
  Vector a(5);
  a << 0.7, 0.2, 0.9, 0.2000001, 4.0;
  for (double c : {1e-6, 0.3, 1.0, 17.0, 1e8}) EXPECT_EQ(select_model(c * a), ModelIndex(2));
}

TEST(Controller, InitialState) {
  const auto s = initial_controller_state(3);
  EXPECT_EQ(s.alpha, Vector::Zero(3));
  EXPECT_EQ(s.current, ModelIndex(1));
  EXPECT_EQ(s.step, 0);
}

TEST(Controller, StepPlaysSelectedGain) {
  MinimaxCertificate cert;
  cert.gains = {Matrix::Constant(1, 2, 1.0), Matrix::Constant(1, 2, 2.0)};
  cert.values.assign(2, std::vector<Matrix>(2, Matrix::Identity(2, 2)));
  cert.gamma_bar = 10.0;
  ControllerState s = initial_controller_state(2);
  s.alpha << 5.0, 1.0;
  Vector x(2);
  x << 1.0, -3.0;
  const auto [u, next] = minimax_step(cert, s, x);
  EXPECT_EQ(next.current, ModelIndex(2));
  ASSERT_EQ(u.size(), 1);
  EXPECT_DOUBLE_EQ(u(0), -2.0 * (1.0 - 3.0));
  EXPECT_EQ(next.alpha, s.alpha);
}

TEST(Controller, ResidualUpdate) {
  const ModelSet ms({{Matrix::Constant(1, 1, 0.5), Matrix::Constant(1, 1, 1.0)},
                     {Matrix::Constant(1, 1, 2.0), Matrix::Constant(1, 1, 0.0)}});
  auto s = initial_controller_state(2);
  const Vector x = Vector::Constant(1, 2.0), u = Vector::Constant(1, -1.0), xn = Vector::Constant(1, 0.5);
  s = update_residuals(ms, s, x, u, xn);
  EXPECT_DOUBLE_EQ(s.alpha(0), 0.25);  // 0.5 - (1 - 1)
  EXPECT_DOUBLE_EQ(s.alpha(1), 12.25);  // 0.5 - 4
  EXPECT_EQ(s.step, 1);
}

TEST(Controller, HinfStep) {
  Matrix K(1, 2);
  K << 0.5, -1.0;
  Vector x(2);
  x << 2.0, 1.0;
  EXPECT_DOUBLE_EQ(hinf_step(K, x)(0), 0.0);
  x << 2.0, -1.0;
  EXPECT_DOUBLE_EQ(hinf_step(K, x)(0), -2.0);
}

}  // namespace
}  // namespace mmac
