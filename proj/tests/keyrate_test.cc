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

#include "qrk/keyrate.h"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "qrk/analytic.h"
#include "qrk/hqr.h"
#include "qrk/oqr.h"

namespace qrk {
namespace {

TEST(SecretFractionTest, Bb84) {
  EXPECT_NEAR(secret_fraction_bb84(0.05, 0.05), 0.42720608576808774, 1e-15);
  EXPECT_EQ(secret_fraction_bb84(0.0, 0.0), 1.0);
  EXPECT_EQ(secret_fraction_bb84(0.2, 0.2), 0.0);
}

TEST(SecretFractionTest, DeviceIndependent) {
  EXPECT_NEAR(secret_fraction_di(0.05, 2.5), 0.17003859968444747, 1e-15);
  EXPECT_EQ(secret_fraction_di(0.0, 2.0), 0.0);
  EXPECT_EQ(secret_fraction_di(0.0, 1.5), 0.0);
  EXPECT_NEAR(secret_fraction_di(0.0, kTsirelson), 1.0, 1e-12);
}

TEST(SecretFractionTest, DiNeverExceedsBb84OnBellDiagonalStates) {
  for (int i = 0; i <= 100; ++i) {
    const double c1 = 0.75 + 0.25 * i / 100.0;
    const double rest = (1.0 - c1) / 3.0;
    const BellDiagonalState s(c1, rest, rest, rest);
    const Qber q = qber_xz(s);
    EXPECT_LE(secret_fraction_di(q.q_z, chsh_value(s)), secret_fraction_bb84(q.q_x, q.q_z) + 1e-12);
  }
}

TEST(SetupTest, Names) {
  EXPECT_EQ(parse_setup("oqr"), Setup::kOqr);
  EXPECT_EQ(to_string(Setup::kHqr), "hqr");
  EXPECT_THROW(parse_setup("xyz"), std::invalid_argument);
}

TEST(EvolveStateTest, PureSourceMatchesClosedForm) {
  for (int n = 0; n <= 4; ++n) {
    const auto evolved = evolve_state({Setup::kOqr, 600.0, n, 0}, {0.97, 1.0, 1.0});
    const auto closed = closed_coeffs(0.97, n);
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(evolved.state[j], closed[j], 1e-12);
    EXPECT_TRUE(evolved.p_ed_prime.empty());
  }
}

TEST(EvolveStateTest, HybridDistillThenSwapWithIdealGates) {
  const auto evolved = evolve_state({Setup::kHqr, 300.0, 1, 1}, {1.0, 1.0, 0.95});
  const auto ed = ed_round_hqr(initial_state_hqr(0.95), HqrGateParams::from_p_c(1.0));
  const auto expected = es_level_hqr(ed.state, HqrGateParams::from_p_c(1.0));
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(evolved.state[j], expected[j], 1e-15);
  ASSERT_EQ(evolved.p_ed_prime.size(), 1u);
  EXPECT_NEAR(evolved.p_ed_prime[0], ed.p_success, 1e-15);
}

TEST(EvolveStateTest, RejectsBadConfig) {
  EXPECT_THROW(evolve_state({Setup::kOqr, 600.0, 21, 0}, {}), std::domain_error);
  EXPECT_THROW(evolve_state({Setup::kOqr, 600.0, 2, -1}, {}), std::domain_error);
  EXPECT_THROW(evolve_state({Setup::kOqr, -5.0, 2, 0}, {}), std::domain_error);
  EXPECT_THROW(evolve_state({Setup::kOqr, 600.0, 2, 0}, {1.5, 1.0, 1.0}), std::domain_error);
}

TEST(KeyRatesTest, IdealPointKeysEqualRepeaterRate) {
  for (int n = 0; n <= 4; ++n) {
    const auto rec = key_rates({Setup::kOqr, 600.0, n, 0}, {1.0, 1.0, 1.0});
    EXPECT_GT(rec.rate_rep, 0.0);
    EXPECT_NEAR(rec.key_dd, rec.rate_rep, 1e-12 * rec.rate_rep);
    EXPECT_NEAR(rec.key_di, rec.rate_rep, 1e-12 * rec.rate_rep);
  }
}

TEST(KeyRatesTest, DistilledOriginalRepeaterLosesDiKey) {
  const auto rec = key_rates({Setup::kOqr, 600.0, 3, 1}, {0.99, 0.975, 0.99});
  EXPECT_EQ(rec.key_di, 0.0);
  EXPECT_GT(rec.key_dd, 0.0);
}

TEST(KeyRatesTest, PureHybridSourceHasNoLinks) {
  const auto rec = key_rates({Setup::kHqr, 300.0, 2, 0}, {0.99, 0.9, 1.0});
  EXPECT_EQ(rec.rate_rep, 0.0);
  EXPECT_EQ(rec.key_dd, 0.0);
  EXPECT_EQ(rec.key_di, 0.0);
}

TEST(KeyRatesTest, ZeroEfficiencyGivesZeroRate) {
  const auto rec = key_rates({Setup::kOqr, 600.0, 2, 1}, {0.99, 0.0, 0.95});
  EXPECT_EQ(rec.rate_rep, 0.0);
}

TEST(KeyRatesTest, DdDominatesDi) {
  for (qrk::Setup setup : {qrk::Setup::kOqr, qrk::Setup::kHqr}) {
    for (double f0 : {0.8, 0.9, 0.97, 1.0}) {
      for (double eta : {0.9, 0.95, 1.0}) {
        for (int k = 0; k <= 2; ++k) {
          const auto rec = key_rates({setup, 300.0, 2, k}, {0.98, eta, f0});
          EXPECT_GE(rec.key_dd, rec.key_di);
        }
      }
    }
  }
}

TEST(KeyRatesTest, SiftingOnlyScalesDdKey) {
  RepeaterConfig config{Setup::kOqr, 600.0, 2, 0};
  const HardwareParams hw{0.99, 0.98, 0.99};
  const auto full = key_rates(config, hw);
  config.r_sift = 0.5;
  const auto half = key_rates(config, hw);
  EXPECT_DOUBLE_EQ(half.key_dd, 0.5 * full.key_dd);
  EXPECT_DOUBLE_EQ(half.key_di, full.key_di);
}

TEST(KeyRatesTest, DdKeyNonDecreasingInSourceFidelity) {
  for (int k = 0; k <= 3; ++k) {
    double prev = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double f0 = 0.8 + 0.2 * i / 40.0;
      const double key = key_rates({Setup::kOqr, 600.0, 2, k}, {0.99, 0.975, f0}).key_dd;
      EXPECT_GE(key, prev - 1e-15);
      prev = key;
    }
  }
}

}  // namespace
}  // namespace qrk
