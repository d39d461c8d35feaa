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

#ifndef QRK_HQR_H_
#define QRK_HQR_H_

#include "qrk/bell.h"
#include "qrk/oqr.h"

namespace qrk {

/// Dissipative gate parameters of the hybrid repeater.
///
/// A controlled-Z acting on qubits a, b is preceded by independent Z errors
/// on each qubit, each absent with probability p_c(p_g).
struct HqrGateParams {
  double p_g;    // local transmission parameter
  double p_c;    // probability that a qubit suffers no Z error, in [1/2, 1]
  double p_bar;  // 2 p_c (p_c - 1), in [-1/2, 0]

  /// Parameters with p_c given directly; p_g is left at NaN.
  static HqrGateParams from_p_c(double p_c);
};

/// (f0, 1 - f0, 0, 0): the state heralded by the optical link. f0 in [0, 1].
BellDiagonalState initial_state_hqr(double f0);

/// p_c = (1 + exp(-pi (1 - p_g^2) / (2 sqrt(p_g) (1 + p_g)))) / 2 for p_g in (0, 1].
HqrGateParams p_no_flip(double p_g);

EdOutcome ed_round_hqr(const BellDiagonalState& state, const HqrGateParams& params);

/// Deterministic swap; qubit measurements are ideal.
BellDiagonalState es_level_hqr(const BellDiagonalState& state, const HqrGateParams& params);

/// Probability of heralding one elementary link:
///   1 - (2 f0 - 1)^(eta_t eta_d / (1 + eta_t (1 - 2 eta_d))).
/// Throws std::domain_error if the exponent's denominator is not positive.
double p0_hqr(double f0, double eta_t, double eta_d);

}  // namespace qrk

#endif  // QRK_HQR_H_
