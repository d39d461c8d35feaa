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

#ifndef QRK_ORACLE_DENSITY_MATRIX_H_
#define QRK_ORACLE_DENSITY_MATRIX_H_

#include <array>
#include <complex>
#include <span>

#include <Eigen/Dense>

#include "qrk/bell.h"

namespace qrk::oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Basis ordering is |q0 q1 ...> with q0 the most significant bit, so a pair
// lives in |00>, |01>, |10>, |11>.

/// Validated density matrix of one pair (dim 4) or two pairs (dim 16).
class DensityMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kEigenvalueFloor = -1e-10;

  /// Throws std::domain_error unless Hermitian, unit trace and PSD within
  /// the tolerances above, with dim 4 or 16.
  explicit DensityMatrix(Matrix m);

  static DensityMatrix bell_diagonal(const BellDiagonalState& state);
  static DensityMatrix maximally_mixed(int num_qubits);

  int dim() const { return static_cast<int>(m_.rows()); }
  int num_qubits() const { return dim() == 4 ? 2 : 4; }
  const Matrix& matrix() const { return m_; }

  /// rho (x) other; both must be pairs.
  DensityMatrix tensor(const DensityMatrix& other) const;

  /// Tr[P_i rho] for the four Bell projectors; pair states only.
  std::array<double, 4> bell_coefficients() const;

  /// Weight outside the Bell-diagonal family: || rho - sum_i c_i P_i ||_F.
  double off_bell_diagonal_norm() const;

 private:
  Matrix m_;
};

/// |phi_i><phi_i| for i in 1..4. Throws std::out_of_range otherwise.
DensityMatrix bell_projector(int i);

/// Single-qubit Paulis and helpers.
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd hadamard();
/// exp(-i theta X / 2).
Eigen::Matrix2cd rotation_x(double theta);

Eigen::Matrix4cd cnot();  // control is the first qubit of the pair
Eigen::Matrix4cd cz();

/// Embeds an operator on `qubits` (in that order) into a register of
/// num_qubits qubits.
Matrix embed(const Matrix& op, std::span<const int> qubits, int num_qubits);

/// Traces out every qubit not listed in `keep`. Works on unnormalized
/// matrices; the kept qubits retain their relative order.
Matrix partial_trace_keep(const Matrix& m, std::span<const int> keep, int num_qubits);

/// Ideal two-qubit unitary acting on qubits (q0, q1) of a register.
struct TwoQubitGate {
  Eigen::Matrix4cd unitary;
  int q0;
  int q1;
};

/// p_g U chi U^dag + (1 - p_g) (identity/4 on the gate qubits) (x) Tr_gate chi.
DensityMatrix apply_depolarizing_gate(const DensityMatrix& chi, double p_g, const TwoQubitGate& gate);

/// Controlled-Z on (q0, q1) applied to
///   p_c^2 chi + (1-p_c)^2 Za Zb chi Zb Za + p_c (1-p_c) (Za chi Za + Zb chi Zb).
DensityMatrix apply_dissipative_gate(const DensityMatrix& chi, double p_c, int q0, int q1);

namespace detail {
// Unvalidated forms used inside circuits, where intermediate matrices may be
// unnormalized.
Matrix conjugate(const Matrix& m, const Matrix& u);
Matrix depolarize(const Matrix& m, double p_g, const TwoQubitGate& gate, int num_qubits);
Matrix dissipate(const Matrix& m, double p_c, int q0, int q1, int num_qubits);
}  // namespace detail

}  // namespace qrk::oracle

#endif  // QRK_ORACLE_DENSITY_MATRIX_H_
