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

#include "qrk/oracle/monte_carlo.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "qrk/rates.h"

namespace qrk::oracle {
namespace {

TEST(MonteCarloTest, NoSwapIsGeometric) {
  const auto est = mc_repeater(0.2, {}, 0, 100000, 42, Strategy::kWaitForAll);
  EXPECT_NEAR(est.mean_attempts, 5.0, 3 * est.std_error);
  const auto sure = mc_repeater(1.0, {}, 0, 1000, 42, Strategy::kImmediateSwap);
  EXPECT_EQ(sure.mean_attempts, 1.0);
  EXPECT_EQ(sure.std_error, 0.0);
}

TEST(MonteCarloTest, DeterministicSwapsMatchZn) {
  for (int n : {1, 2}) {
    const std::vector<double> p_es(n, 1.0);
    for (double p : {0.1, 0.5}) {
      const auto est = mc_repeater(p, p_es, n, 100000, 7, Strategy::kWaitForAll);
      EXPECT_NEAR(est.mean_attempts, zn(n, p), 3 * est.std_error) << "n=" << n << " p=" << p;
    }
  }
}

TEST(MonteCarloTest, ReproducibleForFixedSeedAndChunks) {
  const std::vector<double> p_es{0.9, 0.9};
  const auto a = mc_repeater(0.1, p_es, 2, 20000, 99, Strategy::kImmediateSwap, 8);
  const auto b = mc_repeater(0.1, p_es, 2, 20000, 99, Strategy::kImmediateSwap, 8);
  EXPECT_EQ(a.mean_attempts, b.mean_attempts);
  EXPECT_EQ(a.std_error, b.std_error);
  const auto c = mc_repeater(0.1, p_es, 2, 20000, 100, Strategy::kImmediateSwap, 8);
  EXPECT_NE(a.mean_attempts, c.mean_attempts);
}

TEST(MonteCarloTest, ImmediateSwapIsNotSlower) {
  const std::vector<double> p_es{0.95, 0.95};
  const auto wait = mc_repeater(0.05, p_es, 2, 50000, 3, Strategy::kWaitForAll);
  const auto fast = mc_repeater(0.05, p_es, 2, 50000, 3, Strategy::kImmediateSwap);
  EXPECT_LE(fast.mean_attempts, wait.mean_attempts + 3 * std::hypot(wait.std_error, fast.std_error));
}

TEST(MonteCarloTest, SingleLevelImmediateEqualsWaitForAll) {
  // With one swap both strategies are the same process.
  const std::vector<double> p_es{0.8};
  const auto wait = mc_repeater(0.3, p_es, 1, 100000, 5, Strategy::kWaitForAll);
  const auto fast = mc_repeater(0.3, p_es, 1, 100000, 6, Strategy::kImmediateSwap);
  EXPECT_NEAR(fast.mean_attempts, wait.mean_attempts, 4 * std::hypot(wait.std_error, fast.std_error));
  EXPECT_NEAR(wait.mean_attempts, zn(1, 0.3) / 0.8, 3 * wait.std_error);
}

TEST(MonteCarloTest, RejectsBadInput) {
  const std::vector<double> one{0.9};
  EXPECT_THROW(mc_repeater(0.0, {}, 0, 100, 1, Strategy::kWaitForAll), std::domain_error);
  EXPECT_THROW(mc_repeater(0.5, one, 2, 100, 1, Strategy::kWaitForAll), std::domain_error);
  const std::vector<double> bad{1.2};
  EXPECT_THROW(mc_repeater(0.5, bad, 1, 100, 1, Strategy::kWaitForAll), std::domain_error);
  EXPECT_THROW(parse_strategy("fastest"), std::invalid_argument);
  EXPECT_EQ(parse_strategy("immediate"), Strategy::kImmediateSwap);
}

}  // namespace
}  // namespace qrk::oracle
