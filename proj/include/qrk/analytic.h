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

#ifndef QRK_ANALYTIC_H_
#define QRK_ANALYTIC_H_

#include "qrk/bell.h"

namespace qrk {

// Closed forms for the original repeater fed by pure phi1 sources without
// distillation. There the only noise is gate depolarization, and after n
// levels it enters through p_g^n_bar with n_bar = 2^n - 1.

/// c1 = (1 + 3 p_g^n_bar)/4, c2 = c3 = c4 = (1 - p_g^n_bar)/4.
BellDiagonalState closed_coeffs(double p_g, int n);

struct ClosedObservables {
  double q_dd;    // q_x = q_z of the undisturbed state
  double q_z_di;  // key-setting QBER after the no-click substitution
  double s;       // CHSH value after the no-click substitution
};

ClosedObservables closed_observables(double p_g, double eta_d, int n);

/// eta_d^2 p_g^n_bar > 1/sqrt2, i.e. the final state violates CHSH.
bool chsh_condition(double p_g, double eta_d, int n);

struct SecretFractions {
  double r_dd;  // includes the click probability eta_d^2
  double r_di;
};

/// Both fractions clamped at zero; r_di is zero whenever chsh_condition fails.
SecretFractions closed_secret_fractions(double p_g, double eta_d, int n);

/// (1/2) ln((1 + x)/(1 - x)) for |x| < 1.
double artanh(double x);

/// q = 2x/w artanh(w) + artanh(x), w = sqrt(2x^2 - 1), x = eta_d^2 p_g^n_bar.
/// Requires strict CHSH violation (w > 0); returns +inf at x = 1.
double q_fn(double eta_d, double p_g, double n_bar);

/// Limit of eta_d * d/d(eta_d) r_di as eta_d^2 p_g^n_bar approaches 1/sqrt2
/// from above: sqrt2/ln2 (artanh(1/sqrt2) + sqrt2).
double eta_derivative_threshold_limit();

struct Derivatives {
  double d_eta = 0.0;
  double d_pg = 0.0;
  double d_n = 0.0;
  /// Set when p_g^n_bar (or eta_d^2 p_g^n_bar) equals 1: the p_g and eta
  /// derivatives are reported as +inf and the n derivative by its limit 0.
  bool boundary = false;
};

// The derivative routines treat the nesting level n as a continuous
// variable, n_bar = 2^n - 1. They require n >= 1 (no swap means no
// dependence on p_g).

/// Partial derivatives of eta_d^2 [1 - 2 h((1 - p_g^n_bar)/2)].
Derivatives derivatives_dd(double eta_d, double p_g, double n);

/// Partial derivatives of the unclamped DI fraction
/// 1 - h((1 - x)/2) - h(1/2 + sqrt(2 x^2 - 1)/2). Throws std::domain_error
/// without strict CHSH violation.
Derivatives derivatives_di(double eta_d, double p_g, double n);

struct SensitivityReport {
  Derivatives dd;
  Derivatives di;
  double r_dd = 0.0;
  double r_di = 0.0;
  double n_bar = 0.0;
  /// False below the CHSH threshold; di is then left zeroed.
  bool di_defined = false;
};

/// Fractions and all six derivatives at a (possibly non-integer) n >= 1.
SensitivityReport sensitivity(double eta_d, double p_g, double n);

}  // namespace qrk

#endif  // QRK_ANALYTIC_H_
