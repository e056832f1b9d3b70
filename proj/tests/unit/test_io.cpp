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
#include "mmac/io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <sstream>

namespace mmac {
namespace {

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(io::format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(io::format_number(2.0), "2");
  EXPECT_EQ(io::format_number(-1.5e-20), "-1.5e-20");
  EXPECT_EQ(io::format_number(std::numeric_limits<double>::quiet_NaN()), "");
}

TEST(CertificateFile, RoundTripIsExact) {
  const auto& cert = testing::four_models_search().certificate;
  const auto text = io::certificate_json(cert);
  const auto back = io::parse_certificate(text);
  EXPECT_EQ(back.gamma_bar, cert.gamma_bar);
  EXPECT_EQ(back.gains, cert.gains);
  EXPECT_EQ(back.values, cert.values);
  EXPECT_EQ(io::certificate_json(back), text);
}

TEST(CertificateFile, TruncatedOrIncompleteIsParseError) {
  const auto text = io::certificate_json(testing::four_models_search().certificate);
  EXPECT_THROW(io::parse_certificate(text.substr(0, text.size() / 2)), ParseError);
  EXPECT_THROW(io::parse_certificate("{}"), ParseError);

  auto j = text;
  const auto pos = j.find("\"model_count\": 4");
  ASSERT_NE(pos, std::string::npos);
  j.replace(pos, 16, "\"model_count\": 5");
  EXPECT_THROW(io::parse_certificate(j), ParseError);
}

TEST(DisturbanceFile, RoundTrip) {
  std::vector<Vector> seq = {Vector::Constant(2, 0.125), Vector::Constant(2, -3.0)};
  const auto text = io::disturbance_csv(seq);
  EXPECT_EQ(text, "k,w_1,w_2\n0,0.125,0.125\n1,-3,-3\n");
  EXPECT_EQ(io::parse_disturbance_csv(text), seq);
}

TEST(DisturbanceFile, Malformed) {
  EXPECT_THROW(io::parse_disturbance_csv(""), ParseError);
  EXPECT_THROW(io::parse_disturbance_csv("k,w_1\n0,abc\n"), ParseError);
  EXPECT_THROW(io::parse_disturbance_csv("k,w_1\n1,0.5\n"), ParseError);
  EXPECT_THROW(io::parse_disturbance_csv("k,w_1\n0,0.5\n1,0.5,0.5\n"), ParseError);
}

TEST(TrajectoryFile, Layout) {
  Trajectory t;
  t.x = {Vector::Constant(1, 1.0), Vector::Constant(1, 0.5)};
  t.u = {Vector::Constant(1, -0.5)};
  t.w = {Vector::Constant(1, 0.0)};
  t.selected = std::vector<ModelIndex>{ModelIndex(2)};
  t.step_cost = {1.25, 0.25};
  EXPECT_EQ(io::trajectory_csv(t), "k,x_1,u_1,w_1,l,step_cost\n0,1,-0.5,0,2,1.25\n1,0.5,,,,0.25\n");
}

TEST(RegretFile, NanIsEmpty) {
  RegretReport r;
  r.d = {1.0, 2.0};
  r.R = {1.0, 3.0};
  r.R_over_T = {std::numeric_limits<double>::quiet_NaN(), 3.0};
  r.cost_diff = {0.5, 1.0};
  EXPECT_EQ(io::regret_csv(r), "T,d_T,R_T,R_over_T,cost_diff_T\n0,1,1,,0.5\n1,2,3,3,1\n");
}

TEST(AtomicWrite, ReplacesContent) {
  const auto dir = testing::scratch_dir("io");
  io::write_file_atomic(dir / "sub" / "a.txt", "one");
  io::write_file_atomic(dir / "sub" / "a.txt", "two");
  EXPECT_EQ(io::read_file(dir / "sub" / "a.txt"), "two");
  EXPECT_FALSE(std::filesystem::exists(dir / "sub" / "a.txt.tmp"));
  EXPECT_THROW(io::read_file(dir / "missing"), ParseError);
}

}  // namespace
}  // namespace mmac
