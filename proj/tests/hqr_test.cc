// Copyright 2026 The qrk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrk/hqr.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "qrk/oqr.h"
#include "test_util.h"

namespace qrk {
namespace {

TEST(HqrGateTest, NoFlipProbability) {
  EXPECT_EQ(p_no_flip(1.0).p_c, 1.0);
  EXPECT_EQ(p_no_flip(1.0).p_bar, 0.0);
  EXPECT_NEAR(p_no_flip(0.99).p_c, 0.99216843296806871, 1e-15);
  EXPECT_THROW(p_no_flip(0.0), std::domain_error);
  EXPECT_THROW(p_no_flip(1.2), std::domain_error);
}

TEST(HqrGateTest, NoFlipIsMonotoneAndAtLeastOneHalf) {
  double prev = 0.5;
  for (int i = 1; i <= 100; ++i) {
    const double p_c = p_no_flip(i / 100.0).p_c;
    EXPECT_GE(p_c, prev);
    EXPECT_LE(p_c, 1.0);
    prev = p_c;
  }
}

TEST(HqrInitialStateTest, TwoLabelMixture) {
  const auto s = initial_state_hqr(0.9);
  EXPECT_DOUBLE_EQ(s.c1(), 0.9);
  EXPECT_NEAR(s.c2(), 0.1, 1e-16);
  EXPECT_EQ(s.c3(), 0.0);
  EXPECT_EQ(s.c4(), 0.0);
}

TEST(HqrDistillationTest, IdealGatesAreDeutsch) {
  const auto out = ed_round_hqr(BellDiagonalState(0.75, 0.25, 0.0, 0.0), HqrGateParams::from_p_c(1.0));
  EXPECT_NEAR(out.state.c1(), 0.9, 1e-15);
  EXPECT_NEAR(out.state.c2(), 0.0, 1e-15);
  EXPECT_NEAR(out.state.c3(), 0.1, 1e-15);
  EXPECT_NEAR(out.state.c4(), 0.0, 1e-15);
  EXPECT_NEAR(out.p_success, 0.625, 1e-15);
}

TEST(HqrDistillationTest, IdealGatesAgreeWithOqrModel) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto s = testing::random_state(rng);
    const auto a = ed_round_hqr(s, HqrGateParams::from_p_c(1.0));
    const auto b = ed_round_oqr(s, 1.0);
    EXPECT_NEAR(a.p_success, b.p_success, 1e-14);
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(a.state[j], b.state[j], 1e-14);
  }
}

TEST(HqrDistillationTest, NoisyRoundOnLinkStateIsValid) {
  const auto out = ed_round_hqr(BellDiagonalState(0.9, 0.1, 0.0, 0.0), p_no_flip(0.99));
  double sum = 0.0;
  for (double c : out.state.coefficients()) sum += c;
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_GT(out.p_success, 0.0);
}

TEST(HqrSwapTest, PureInput) {
  for (double p_c : {0.5, 0.8, 0.95, 1.0}) {
    const auto s = es_level_hqr(BellDiagonalState(), HqrGateParams::from_p_c(p_c));
    EXPECT_NEAR(s.c1(), p_c * p_c, 1e-15);
    EXPECT_NEAR(s.c2(), p_c - p_c * p_c, 1e-15);
    EXPECT_NEAR(s.c3(), p_c - p_c * p_c, 1e-15);
    EXPECT_NEAR(s.c4(), (1 - p_c) * (1 - p_c), 1e-15);
  }
}

TEST(HqrSwapTest, IdealGatesConvolveLabels) {
  const auto s = es_level_hqr(BellDiagonalState(0.5, 0.5, 0.0, 0.0), HqrGateParams::from_p_c(1.0));
  EXPECT_NEAR(s.c1(), 0.5, 1e-15);
  EXPECT_NEAR(s.c2(), 0.5, 1e-15);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto in = testing::random_state(rng);
    const auto a = es_level_hqr(in, HqrGateParams::from_p_c(1.0));
    const auto b = es_level_oqr(in, 1.0);
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(a[j], b[j], 1e-14);
  }
}

TEST(HqrSwapTest, TransformsPreserveNormalization) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.5, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto s = testing::random_state(rng);
    const auto params = HqrGateParams::from_p_c(u(rng));
    const auto swapped = es_level_hqr(s, params);
    const auto distilled = ed_round_hqr(s, params).state;
    double sum = 0.0;
    for (double c : swapped.coefficients()) sum += c;
    EXPECT_NEAR(sum, 1.0, 1e-9);
    sum = 0.0;
    for (double c : distilled.coefficients()) sum += c;
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(HqrLinkTest, Anchors) {
  EXPECT_EQ(p0_hqr(1.0, 0.5, 0.9), 0.0);
  EXPECT_EQ(p0_hqr(0.5, 0.5, 0.9), 1.0);
  EXPECT_NEAR(p0_hqr(0.95, 0.676, 0.9), 0.13028830342600702, 1e-14);
  EXPECT_THROW(p0_hqr(0.4, 0.5, 0.9), std::domain_error);
  EXPECT_THROW(p0_hqr(0.9, 0.0, 0.9), std::domain_error);
}

TEST(HqrLinkTest, ProbabilityFallsWithFidelity) {
  double prev = 1.0;
  for (double f = 0.55; f <= 1.0; f += 0.05) {
    const double p = p0_hqr(f, 0.6, 0.95);
    EXPECT_LE(p, prev);
    prev = p;
  }
}

}  // namespace
}  // namespace qrk
