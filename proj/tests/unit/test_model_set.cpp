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

#include "mmac/config.hpp"
#include "mmac/errors.hpp"
#include "mmac/model_set.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <fstream>

namespace mmac {
namespace {

using testing::four_models;

const char* kMinimal = R"({
  "models": [{"A": [[0.5]], "B": [[1.0]]}],
  "penalties": {"Q": [[1]], "R": [[1]]},
  "experiment": {"j": 1, "T": 10}
})";

TEST(Config, LoadsFourModelExample) {
  const auto& cfg = four_models();
  EXPECT_EQ(cfg.model_set.size(), 4u);
  EXPECT_EQ(cfg.model_set.state_dim(), 3);
  EXPECT_EQ(cfg.model_set.input_dim(), 1);
  EXPECT_EQ(cfg.true_model, ModelIndex(2));
  EXPECT_EQ(cfg.horizon, 100);
  EXPECT_TRUE(cfg.penalties.Q().isApprox(Matrix::Identity(3, 3)));
  EXPECT_DOUBLE_EQ(cfg.model_set[ModelIndex(3)].A(0, 1), 1.435);
  EXPECT_DOUBLE_EQ(cfg.model_set[ModelIndex(4)].B(2, 0), 1.248);
}

TEST(Config, DefaultsInitialStateToOnes) {
  const auto cfg = parse_config(kMinimal);
  ASSERT_EQ(cfg.x0.size(), 1);
  EXPECT_EQ(cfg.x0(0), 1.0);
  EXPECT_FALSE(cfg.gamma.has_value());
  EXPECT_EQ(cfg.disturbance.kind, DisturbanceRequest::Kind::kZero);
}

TEST(Config, RejectsEmptyModelList) {
  EXPECT_THROW(parse_config(R"({"models": [], "penalties": {"Q": [[1]], "R": [[1]]},
                                "experiment": {"j": 1, "T": 5}})"),
               ValidationError);
}

TEST(Config, RejectsMismatchedInputMatrix) {
  EXPECT_THROW(parse_config(R"({"models": [{"A": [[1,0,0],[0,1,0],[0,0,1]], "B": [[1],[1]]}],
                                "penalties": {"Q": [[1,0,0],[0,1,0],[0,0,1]], "R": [[1]]},
                                "experiment": {"j": 1, "T": 5}})"),
               ValidationError);
}

TEST(Config, RejectsBadExperimentFields) {
  const std::string base = R"({"models": [{"A": [[0.5]], "B": [[1]]}, {"A": [[0.4]], "B": [[1]]}],
                               "penalties": {"Q": [[1]], "R": [[1]]}, )";
  EXPECT_THROW(parse_config(base + R"("experiment": {"j": 3, "T": 5}})"), ValidationError);
  EXPECT_THROW(parse_config(base + R"("experiment": {"j": 1, "T": 0}})"), ValidationError);
  EXPECT_THROW(parse_config(base + R"("experiment": {"j": 1, "T": 5, "x0": [1, 2]}})"), ValidationError);
  EXPECT_THROW(parse_config(base + R"("experiment": {"j": 1, "T": 5, "gamma": -1}})"), ValidationError);
  EXPECT_THROW(parse_config(base + R"("experiment": {"j": 1, "T": 5},
                                      "disturbance": {"kind": "confusing", "target": 1}})"),
               ValidationError);
  EXPECT_THROW(parse_config(base + R"("experiment": {"j": 1, "T": 5},
                                      "disturbance": {"kind": "sinusoid", "direction": [2]}})"),
               ValidationError);
}

TEST(Config, MalformedTextIsParseError) {
  EXPECT_THROW(parse_config("{\"models\": [", {}), ParseError);
  EXPECT_THROW(parse_config(R"({"penalties": {}})"), ParseError);
  EXPECT_THROW(parse_config(R"({"models": [{"A": [[1, 2], [3]], "B": [[1]]}]})"), ParseError);
}

TEST(Config, RegretThresholdsOverride) {
  const std::string base = R"({"models": [{"A": [[0.5]], "B": [[1.0]]}], "penalties": {"Q": 1, "R": 1},
    "experiment": {"j": 1, "T": 10}, )";
  const auto d = parse_config(kMinimal);
  EXPECT_EQ(d.sublinearity.tail_fraction, 0.25);
  EXPECT_EQ(d.sublinearity.peak_ratio_factor, 0.5);
  const auto cfg = parse_config(base + R"("regret": {"tail_fraction": 0.5, "peak_ratio_factor": 0.2}})");
  EXPECT_EQ(cfg.sublinearity.tail_fraction, 0.5);
  EXPECT_EQ(cfg.sublinearity.peak_ratio_factor, 0.2);
  EXPECT_EQ(parse_config(dump_config(cfg)).sublinearity.peak_ratio_factor, 0.2);
  EXPECT_THROW(parse_config(base + R"("regret": {"tail_fraction": 0}})"), ValidationError);
  EXPECT_THROW(parse_config(base + R"("regret": {"peak_ratio_factor": -1}})"), ValidationError);
  EXPECT_THROW(parse_config(base + R"("regret": 3})"), ParseError);
}

TEST(Config, RoundTripIsIdentity) {
  auto cfg = four_models();
  cfg.gamma = 12.5;
  cfg.disturbance.kind = DisturbanceRequest::Kind::kConfusing;
  cfg.disturbance.target = ModelIndex(3);
  cfg.disturbance.theta = {Vector::Constant(4, 0.25)};
  const auto text = dump_config(cfg);
  const auto back = parse_config(text);
  EXPECT_EQ(dump_config(back), text);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(back.model_set.models()[i].A, cfg.model_set.models()[i].A);
    EXPECT_EQ(back.model_set.models()[i].B, cfg.model_set.models()[i].B);
  }
  EXPECT_EQ(back.x0, cfg.x0);
  EXPECT_EQ(back.gamma, cfg.gamma);
  EXPECT_EQ(back.disturbance.target, cfg.disturbance.target);
  ASSERT_EQ(back.disturbance.theta.size(), 1u);
  EXPECT_EQ(back.disturbance.theta[0], cfg.disturbance.theta[0]);
}

TEST(Config, ExternalSequenceResolvesRelativeToConfig) {
  const auto dir = testing::scratch_dir("cfg");
  std::ofstream(dir / "w.csv") << "k,w_1\n0,0.5\n1,-0.25\n";
  std::ofstream(dir / "c.json") << R"({"models": [{"A": [[0.5]], "B": [[1]]}],
    "penalties": {"Q": [[1]], "R": [[1]]}, "experiment": {"j": 1, "T": 2},
    "disturbance": {"kind": "external", "file": "w.csv"}})";
  const auto cfg = load_config(dir / "c.json");
  ASSERT_EQ(cfg.disturbance.sequence.size(), 2u);
  EXPECT_EQ(cfg.disturbance.sequence[1](0), -0.25);

  std::ofstream(dir / "short.json") << R"({"models": [{"A": [[0.5]], "B": [[1]]}],
    "penalties": {"Q": [[1]], "R": [[1]]}, "experiment": {"j": 1, "T": 3},
    "disturbance": {"kind": "external", "file": "w.csv"}})";
  EXPECT_THROW(load_config(dir / "short.json"), ValidationError);
}

TEST(ModelSet, IndexOutOfRangeThrows) {
  const auto& ms = four_models().model_set;
  EXPECT_THROW(ms[ModelIndex(0)], PreconditionError);
  EXPECT_THROW(ms[ModelIndex(5)], PreconditionError);
  EXPECT_TRUE(ms.contains(ModelIndex(4)));
  EXPECT_FALSE(ms.contains(ModelIndex(5)));
  EXPECT_EQ(ms.subset(ModelIndex(2)).size(), 1u);
  EXPECT_EQ(ms.subset(ModelIndex(2))[ModelIndex(1)].A, ms[ModelIndex(2)].A);
}

TEST(ModelSet, RejectsNonFiniteEntries) {
  Matrix A = Matrix::Identity(2, 2);
  A(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(ModelSet({{A, Matrix::Ones(2, 1)}}), ValidationError);
}

TEST(Penalties, SymmetryHandling) {
  Matrix Q = Matrix::Identity(2, 2);
  Q(0, 1) = 1e-8;
  EXPECT_THROW(Penalties(Q, Matrix::Identity(1, 1)), ValidationError);
  Q(0, 1) = 1e-10;
  const Penalties p(Q, Matrix::Identity(1, 1));
  EXPECT_EQ(p.Q()(0, 1), p.Q()(1, 0));
  EXPECT_DOUBLE_EQ(p.Q()(0, 1), 5e-11);
}

TEST(Penalties, RequiresPositiveDefinite) {
  Matrix Q = Matrix::Identity(2, 2);
  Q(1, 1) = 0.0;
  EXPECT_THROW(Penalties(Q, Matrix::Identity(1, 1)), ValidationError);
  EXPECT_THROW(Penalties(Matrix::Identity(2, 2), -Matrix::Identity(1, 1)), ValidationError);
}

TEST(Penalties, StageCost) {
  Matrix Q(2, 2);
  Q << 2, 1, 1, 3;
  const Penalties p(Q, Matrix::Constant(1, 1, 4.0));
  Vector x(2), u(1);
  x << 1, -1;
  u << 0.5;
  EXPECT_DOUBLE_EQ(p.stage_cost(x, u), 2 - 2 + 3 + 1);
  EXPECT_DOUBLE_EQ(p.stage_cost(x, Vector{}), 3);
}

TEST(Lqr, MatchesSymplecticOracle) {
  const auto& cfg = four_models();
  for (const auto& m : cfg.model_set.models()) {
    Matrix P;
    ASSERT_GT(lqr_riccati(m.A, m.B, cfg.penalties, P), 0);
    const Matrix ref = testing::oracle::dare_symplectic(m.A, m.B, cfg.penalties.Q(), cfg.penalties.R());
    EXPECT_LT((P - ref).cwiseAbs().maxCoeff(), 1e-7 * std::max(1.0, ref.cwiseAbs().maxCoeff()));
    const Matrix K = lqr_gain(m.A, m.B, cfg.penalties, P);
    const Matrix Kref = testing::oracle::lqr_gain(m.A, m.B, cfg.penalties.R(), ref);
    EXPECT_LT((K - Kref).cwiseAbs().maxCoeff(), 1e-7);
  }
}

TEST(Lqr, StabilizabilityCheck) {
  for (const auto& e : validate_stabilizability(four_models().model_set, four_models().penalties)) {
    EXPECT_TRUE(e.stabilizable) << "model " << to_string(e.model);
  }
  const ModelSet bad({{Matrix::Constant(1, 1, 2.0), Matrix::Zero(1, 1)}});
  const Penalties p(Matrix::Identity(1, 1), Matrix::Identity(1, 1));
  const auto entries = validate_stabilizability(bad, p);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_FALSE(entries[0].stabilizable);
}

}  // namespace
}  // namespace mmac
