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

#include "qrk/analytic.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "qrk/keyrate.h"
#include "qrk/oqr.h"

namespace qrk {
namespace {

// Independent restatement of the unclamped fractions, used as the
// finite-difference target.
double h(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }
double raw_dd(double eta, double pg, double n) {
  const double x = std::pow(pg, std::exp2(n) - 1);
  return eta * eta * (1 - 2 * h((1 - x) / 2));
}
double raw_di(double eta, double pg, double n) {
  const double y = eta * eta * std::pow(pg, std::exp2(n) - 1);
  return 1 - h((1 - y) / 2) - h(0.5 + std::sqrt(2 * y * y - 1) / 2);
}

double central(const std::function<double(double)>& f, double x, double step = 1e-6) {
  return (f(x + step) - f(x - step)) / (2 * step);
}

TEST(ClosedCoeffsTest, FrozenValue) {
  EXPECT_NEAR(closed_coeffs(0.99, 2).c1(), 0.97772425, 1e-15);
  EXPECT_EQ(closed_coeffs(0.9, 0), BellDiagonalState());
}

TEST(ClosedCoeffsTest, EqualsIteratedSwaps) {
  for (double pg : {0.9, 0.95, 0.99, 1.0}) {
    BellDiagonalState s;
    for (int n = 0; n <= 6; ++n) {
      const auto closed = closed_coeffs(pg, n);
      for (int j = 0; j < 4; ++j) EXPECT_NEAR(s[j], closed[j], 1e-12);
      s = es_level_oqr(s, pg);
    }
  }
}

TEST(ClosedObservablesTest, FrozenValues) {
  const auto o = closed_observables(0.99, 1.0, 1);
  EXPECT_NEAR(o.q_dd, 0.005, 1e-15);
  EXPECT_NEAR(o.s, kTsirelson * 0.99, 1e-14);
}

TEST(ChshConditionTest, Threshold) {
  EXPECT_FALSE(chsh_condition(0.70, 1.0, 1));
  EXPECT_TRUE(chsh_condition(0.72, 1.0, 1));
  EXPECT_FALSE(chsh_condition(1.0, 0.8, 1));
}

TEST(ClosedSecretFractionsTest, AgreesWithPipeline) {
  const auto f = closed_secret_fractions(0.99, 0.975, 2);
  EXPECT_GT(f.r_di, 0.0);
  EXPECT_LT(f.r_di, f.r_dd);
  EXPECT_LT(f.r_dd, 1.0);
  const auto rec = key_rates({Setup::kOqr, 600.0, 2, 0}, {0.99, 0.975, 1.0});
  EXPECT_NEAR(f.r_dd, 0.975 * 0.975 * rec.r_dd, 1e-12);
  EXPECT_NEAR(f.r_di, rec.r_di, 1e-12);
}

TEST(ArtanhTest, FrozenValue) {
  EXPECT_NEAR(artanh(1 / kSqrt2), 0.88137358701954303, 1e-15);
  EXPECT_EQ(artanh(0.0), 0.0);
  EXPECT_THROW(artanh(1.0), std::domain_error);
}

TEST(QFunctionTest, ThresholdLimit) {
  const double eps = 1e-9;
  const double eta = std::sqrt((1 / kSqrt2) * (1 + eps));
  EXPECT_NEAR(q_fn(eta, 1.0, 1.0), 2.2955871493926381, 1e-6);
  EXPECT_THROW(q_fn(0.8, 1.0, 1.0), std::domain_error);
  EXPECT_TRUE(std::isinf(q_fn(1.0, 1.0, 1.0)));
}

TEST(QFunctionTest, ConsistentWithEtaDerivative) {
  const double eta = std::sqrt(0.9), pg = 1.0;
  const double numeric = central([&](double e) { return raw_di(e, pg, 1.0); }, eta);
  // dy/d(eta) = 2 eta p_g^n_bar with p_g = 1.
  EXPECT_NEAR(numeric, 2 * eta / std::numbers::ln2 * q_fn(eta, pg, 1.0), 1e-6 * std::abs(numeric));
}

TEST(ThresholdLimitTest, Value) {
  EXPECT_NEAR(eta_derivative_threshold_limit(), 4.6836380083922146, 1e-12);
  EXPECT_GT(eta_derivative_threshold_limit(), 2.0);
}

TEST(DerivativesTest, MatchFiniteDifferences) {
  for (double eta : {0.93, 0.97, 1.0 - 1e-5}) {
    for (double pg : {0.97, 0.99, 0.999}) {
      for (double n : {1.0, 1.5, 2.0, 3.0}) {
        if (eta * eta * std::pow(pg, std::exp2(n) - 1) <= 1 / kSqrt2 + 1e-3) continue;
        const auto dd = derivatives_dd(eta, pg, n);
        const auto di = derivatives_di(eta, pg, n);
        const double fd[6] = {
            central([&](double e) { return raw_dd(e, pg, n); }, eta),
            central([&](double p) { return raw_dd(eta, p, n); }, pg),
            central([&](double m) { return raw_dd(eta, pg, m); }, n),
            central([&](double e) { return raw_di(e, pg, n); }, eta),
            central([&](double p) { return raw_di(eta, p, n); }, pg),
            central([&](double m) { return raw_di(eta, pg, m); }, n),
        };
        const double an[6] = {dd.d_eta, dd.d_pg, dd.d_n, di.d_eta, di.d_pg, di.d_n};
        for (int i = 0; i < 6; ++i) {
          EXPECT_NEAR(an[i], fd[i], 1e-6 * std::abs(fd[i]) + 1e-9) << "eta=" << eta << " pg=" << pg << " n=" << n
                                                                  << " derivative " << i;
        }
        EXPECT_GT(di.d_eta, dd.d_eta);
      }
    }
  }
}

TEST(DerivativesTest, BoundaryAtPerfectGates) {
  const auto dd = derivatives_dd(0.9, 1.0, 2.0);
  EXPECT_TRUE(dd.boundary);
  EXPECT_TRUE(std::isinf(dd.d_pg));
  EXPECT_EQ(dd.d_n, 0.0);
  const auto di = derivatives_di(1.0, 1.0, 2.0);
  EXPECT_TRUE(std::isinf(di.d_eta));
  EXPECT_THROW(derivatives_di(0.8, 1.0, 1.0), std::domain_error);
  EXPECT_THROW(derivatives_dd(0.9, 0.99, 0.5), std::domain_error);
}

TEST(SensitivityTest, NestingDerivativeIsNegative) {
  for (double pg = 0.95; pg < 0.9995; pg += 0.005) {
    for (double n : {1.0, 2.0, 3.0}) {
      const auto s = sensitivity(1.0, pg, n);
      if (s.r_dd > 0) {
        EXPECT_LT(s.dd.d_n / s.r_dd, 0.0);
      }
      if (s.di_defined && s.r_di > 0) {
        EXPECT_LT(s.di.d_n / s.r_di, 0.0);
      }
    }
  }
}

TEST(SensitivityTest, DiUndefinedBelowThreshold) {
  const auto s = sensitivity(0.8, 1.0, 1.0);
  EXPECT_FALSE(s.di_defined);
  EXPECT_EQ(s.r_di, 0.0);
  EXPECT_DOUBLE_EQ(s.n_bar, 1.0);
}

}  // namespace
}  // namespace qrk
