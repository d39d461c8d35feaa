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
#include <limits>
#include <numbers>

#include "checks.h"

namespace qrk {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_params(double p_g, double eta_d) {
  internal::require_probability(p_g, "gate quality");
  internal::require_probability(eta_d, "detector efficiency");
}

double n_bar_of(int n) {
  if (n < 0) {
    internal::domain_fail("nesting level must be non-negative, got ", n);
  }
  return std::ldexp(1.0, n) - 1.0;
}

double continuous_n_bar(double n) {
  if (!(n >= 1.0) || !std::isfinite(n)) {
    internal::domain_fail("derivatives need a nesting level n >= 1, got ", n);
  }
  return std::exp2(n) - 1.0;
}

// artanh(w)/w, accurate as w -> 0.
double artanh_over_x(double w) {
  if (std::abs(w) < 1e-4) {
    const double w2 = w * w;
    return 1.0 + w2 / 3.0 + w2 * w2 / 5.0;
  }
  return artanh(w) / w;
}

SecretFractions fractions_at(double p_g, double eta_d, double n_bar) {
  const double x = std::pow(p_g, n_bar);
  const double click = eta_d * eta_d;
  const double y = click * x;
  SecretFractions out{};
  out.r_dd = std::max(0.0, click * (1.0 - 2.0 * binary_entropy((1.0 - x) / 2.0)));
  if (y > 1.0 / kSqrt2) {
    const double w = std::sqrt(std::min(1.0, 2.0 * y * y - 1.0));
    out.r_di = std::max(0.0, 1.0 - binary_entropy((1.0 - y) / 2.0) - binary_entropy(0.5 + 0.5 * w));
  }
  return out;
}

}  // namespace

BellDiagonalState closed_coeffs(double p_g, int n) {
  internal::require_probability(p_g, "gate quality");
  const double x = std::pow(p_g, n_bar_of(n));
  const double rest = (1.0 - x) / 4.0;
  return BellDiagonalState((1.0 + 3.0 * x) / 4.0, rest, rest, rest);
}

ClosedObservables closed_observables(double p_g, double eta_d, int n) {
  check_params(p_g, eta_d);
  const double x = std::pow(p_g, n_bar_of(n));
  const double y = eta_d * eta_d * x;
  return {(1.0 - x) / 2.0, (1.0 - y) / 2.0, kTsirelson * y};
}

bool chsh_condition(double p_g, double eta_d, int n) {
  check_params(p_g, eta_d);
  return eta_d * eta_d * std::pow(p_g, n_bar_of(n)) > 1.0 / kSqrt2;
}

SecretFractions closed_secret_fractions(double p_g, double eta_d, int n) {
  check_params(p_g, eta_d);
  return fractions_at(p_g, eta_d, n_bar_of(n));
}

double artanh(double x) {
  if (!(std::abs(x) < 1.0)) {
    internal::domain_fail("artanh needs |x| < 1, got ", x);
  }
  return 0.5 * std::log((1.0 + x) / (1.0 - x));
}

double q_fn(double eta_d, double p_g, double n_bar) {
  check_params(p_g, eta_d);
  const double x = eta_d * eta_d * std::pow(p_g, n_bar);
  const double w2 = 2.0 * x * x - 1.0;
  if (!(w2 > 0.0)) {
    internal::domain_fail("q(eta_d, p_g, n_bar) needs strict CHSH violation, eta_d^2 p_g^n_bar = ", x);
  }
  if (x >= 1.0) {
    return kInf;
  }
  return 2.0 * x * artanh_over_x(std::sqrt(w2)) + artanh(x);
}

double eta_derivative_threshold_limit() {
  return kSqrt2 / std::numbers::ln2 * (artanh(1.0 / kSqrt2) + kSqrt2);
}

Derivatives derivatives_dd(double eta_d, double p_g, double n) {
  check_params(p_g, eta_d);
  const double n_bar = continuous_n_bar(n);
  const double x = std::pow(p_g, n_bar);
  const double click = eta_d * eta_d;
  Derivatives d;
  d.d_eta = 2.0 * eta_d * (1.0 - 2.0 * binary_entropy((1.0 - x) / 2.0));
  if (x >= 1.0) {
    d.boundary = true;
    d.d_pg = kInf;
    d.d_n = 0.0;
    return d;
  }
  const double at = artanh(x);
  d.d_pg = 2.0 * n_bar * click * std::pow(p_g, n_bar - 1.0) / std::numbers::ln2 * at;
  d.d_n = 2.0 * (n_bar + 1.0) * click * x * std::log(p_g) * at;
  return d;
}

Derivatives derivatives_di(double eta_d, double p_g, double n) {
  check_params(p_g, eta_d);
  const double n_bar = continuous_n_bar(n);
  const double x = std::pow(p_g, n_bar);
  const double click = eta_d * eta_d;
  const double q = q_fn(eta_d, p_g, n_bar);
  Derivatives d;
  if (std::isinf(q)) {
    d.boundary = true;
    d.d_eta = kInf;
    d.d_pg = kInf;
    d.d_n = 0.0;
    return d;
  }
  d.d_eta = 2.0 * eta_d * x / std::numbers::ln2 * q;
  d.d_pg = n_bar * click * std::pow(p_g, n_bar - 1.0) / std::numbers::ln2 * q;
  d.d_n = (n_bar + 1.0) * click * x * std::log(p_g) * q;
  return d;
}

SensitivityReport sensitivity(double eta_d, double p_g, double n) {
  check_params(p_g, eta_d);
  SensitivityReport report;
  report.n_bar = continuous_n_bar(n);
  const SecretFractions r = fractions_at(p_g, eta_d, report.n_bar);
  report.r_dd = r.r_dd;
  report.r_di = r.r_di;
  report.dd = derivatives_dd(eta_d, p_g, n);
  const double y = eta_d * eta_d * std::pow(p_g, report.n_bar);
  if (2.0 * y * y - 1.0 > 0.0) {
    report.di = derivatives_di(eta_d, p_g, n);
    report.di_defined = true;
  }
  return report;
}

}  // namespace qrk
