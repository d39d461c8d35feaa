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

#ifndef QRK_OQR_H_
#define QRK_OQR_H_

#include "qrk/bell.h"

namespace qrk {

/// Result of one successful distillation round.
struct EdOutcome {
  BellDiagonalState state;
  /// Success probability of the gate-level protocol, detector factors excluded.
  double p_success;
};

// Original repeater: two-qubit gates act as p_g * ideal + (1 - p_g)/4 * identity.

/// Werner state (f0, (1-f0)/3, (1-f0)/3, (1-f0)/3). Requires f0 in [1/4, 1].
BellDiagonalState initial_state_oqr(double f0);

/// One round of the Deutsch protocol on two identical copies. Distillation
/// uses one noisy gate per side, hence p_g^2 in the transform.
EdOutcome ed_round_oqr(const BellDiagonalState& state, double p_g);

/// Swaps two identical pairs with one noisy gate.
BellDiagonalState es_level_oqr(const BellDiagonalState& state, double p_g);

/// Swap success probability with photon detectors of efficiency eta_d
/// (dark counts neglected): eta_d^2.
double es_success_oqr(double eta_d);

}  // namespace qrk

#endif  // QRK_OQR_H_
