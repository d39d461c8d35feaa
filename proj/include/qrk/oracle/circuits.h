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

#ifndef QRK_ORACLE_CIRCUITS_H_
#define QRK_ORACLE_CIRCUITS_H_

#include "qrk/oracle/density_matrix.h"

namespace qrk::oracle {

/// Noise model of the two-qubit gates in the distillation and swap circuits.
struct GateModel {
  enum class Kind { kIdeal, kDepolarizing, kDissipative };

  Kind kind = Kind::kIdeal;
  double parameter = 1.0;  // p_g for depolarizing, p_c for dissipative

  static GateModel ideal() { return {}; }
  static GateModel depolarizing(double p_g) { return {Kind::kDepolarizing, p_g}; }
  static GateModel dissipative(double p_c) { return {Kind::kDissipative, p_c}; }
};

struct CircuitOutcome {
  DensityMatrix state;
  double p_success;
};

/// One round of recurrence distillation on two copies of `pair`.
/// Bilateral X rotations, bilateral CNOTs, keep the first pair when the
/// target pair's parities agree. Throws std::domain_error if the success
/// probability is below 1e-15.
CircuitOutcome ed_oracle(const DensityMatrix& pair, const GateModel& model);

/// Entanglement swapping of pairs (a, b) and (c, d) into (a, d): Bell
/// measurement of (b, c) with Pauli correction on d, averaged over outcomes.
DensityMatrix es_oracle(const DensityMatrix& left, const DensityMatrix& right, const GateModel& model);

/// CHSH value with A0,1 = (X +- Z)/sqrt2, B0 = X, B1 = Z.
double chsh_oracle(const DensityMatrix& pair);

/// Probabilities that Z (or X) outcomes of the two qubits disagree.
struct Marginals {
  double z_mismatch;
  double x_mismatch;
};
Marginals mismatch_oracle(const DensityMatrix& pair);

}  // namespace qrk::oracle

#endif  // QRK_ORACLE_CIRCUITS_H_
