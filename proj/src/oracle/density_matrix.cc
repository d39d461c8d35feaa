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

#include "qrk/oracle/density_matrix.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qrk::oracle {
namespace {

// Bit of qubit q (q = 0 most significant) in a basis index of an n-qubit register.
int bit(int index, int q, int n) { return (index >> (n - 1 - q)) & 1; }

std::array<Eigen::Vector4cd, 4> bell_vectors() {
  const double r = 1.0 / kSqrt2;
  std::array<Eigen::Vector4cd, 4> v;
  v[0] << r, 0, 0, r;
  v[1] << r, 0, 0, -r;
  v[2] << 0, r, r, 0;
  v[3] << 0, r, -r, 0;
  return v;
}

[[noreturn]] void invalid(const std::string& what) { throw std::domain_error("invalid density matrix: " + what); }

}  // namespace

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || (m_.rows() != 4 && m_.rows() != 16)) {
    std::ostringstream os;
    os << "dimension " << m_.rows() << "x" << m_.cols() << " (expected 4 or 16)";
    invalid(os.str());
  }
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
    invalid("not Hermitian");
  }
  const Complex tr = m_.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTolerance || std::abs(tr.imag()) > kTraceTolerance) {
    invalid("trace is not 1");
  }
  const Matrix herm = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenvalueFloor) {
    invalid("negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::bell_diagonal(const BellDiagonalState& state) {
  const auto v = bell_vectors();
  Matrix m = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    m += state[i] * v[i] * v[i].adjoint();
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  const int dim = 1 << num_qubits;
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
  if (dim() != 4 || other.dim() != 4) {
    throw std::domain_error("tensor product is only defined for two pairs");
  }
  Matrix out(16, 16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out.block(4 * i, 4 * j, 4, 4) = m_(i, j) * other.m_;
    }
  }
  return DensityMatrix(std::move(out));
}

std::array<double, 4> DensityMatrix::bell_coefficients() const {
  if (dim() != 4) {
    throw std::domain_error("Bell coefficients need a pair state");
  }
  const auto v = bell_vectors();
  std::array<double, 4> c{};
  for (int i = 0; i < 4; ++i) {
    c[i] = (v[i].adjoint() * m_ * v[i])(0, 0).real();
  }
  return c;
}

double DensityMatrix::off_bell_diagonal_norm() const {
  const auto c = bell_coefficients();
  const auto v = bell_vectors();
  Matrix rest = m_;
  for (int i = 0; i < 4; ++i) {
    rest -= c[i] * v[i] * v[i].adjoint();
  }
  return rest.norm();
}

DensityMatrix bell_projector(int i) {
  if (i < 1 || i > 4) {
    throw std::out_of_range("Bell state index must be 1..4, got " + std::to_string(i));
  }
  const auto v = bell_vectors();
  return DensityMatrix(v[i - 1] * v[i - 1].adjoint());
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return m / kSqrt2;
}

Eigen::Matrix2cd rotation_x(double theta) {
  return std::cos(theta / 2) * Eigen::Matrix2cd::Identity() - Complex(0, std::sin(theta / 2)) * pauli_x();
}

Eigen::Matrix4cd cnot() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

Eigen::Matrix4cd cz() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(3, 3) = -1;
  return m;
}

Matrix embed(const Matrix& op, std::span<const int> qubits, int num_qubits) {
  const int k = static_cast<int>(qubits.size());
  if (op.rows() != (1 << k) || op.cols() != (1 << k)) {
    throw std::domain_error("operator dimension does not match the number of target qubits");
  }
  for (int q : qubits) {
    if (q < 0 || q >= num_qubits) {
      throw std::domain_error("target qubit outside the register");
    }
  }
  const int dim = 1 << num_qubits;
  std::vector<int> rest_mask(dim), sub(dim);
  int target_mask = 0;
  for (int q : qubits) target_mask |= 1 << (num_qubits - 1 - q);
  for (int idx = 0; idx < dim; ++idx) {
    rest_mask[idx] = idx & ~target_mask;
    int s = 0;
    for (int t = 0; t < k; ++t) s = (s << 1) | bit(idx, qubits[t], num_qubits);
    sub[idx] = s;
  }
  Matrix out = Matrix::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (rest_mask[r] == rest_mask[c]) out(r, c) = op(sub[r], sub[c]);
    }
  }
  return out;
}

Matrix partial_trace_keep(const Matrix& m, std::span<const int> keep, int num_qubits) {
  if (m.rows() != (Eigen::Index{1} << num_qubits)) {
    throw std::domain_error("matrix dimension does not match the register size");
  }
  const int k = static_cast<int>(keep.size());
  const int dim = 1 << num_qubits;
  int keep_mask = 0;
  for (int q : keep) keep_mask |= 1 << (num_qubits - 1 - q);
  Matrix out = Matrix::Zero(1 << k, 1 << k);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if ((r & ~keep_mask) != (c & ~keep_mask)) continue;
      int sr = 0, sc = 0;
      for (int t = 0; t < k; ++t) {
        sr = (sr << 1) | bit(r, keep[t], num_qubits);
        sc = (sc << 1) | bit(c, keep[t], num_qubits);
      }
      out(sr, sc) += m(r, c);
    }
  }
  return out;
}

namespace detail {

Matrix conjugate(const Matrix& m, const Matrix& u) { return u * m * u.adjoint(); }

Matrix depolarize(const Matrix& m, double p_g, const TwoQubitGate& gate, int num_qubits) {
  const std::array<int, 2> qs{gate.q0, gate.q1};
  const Matrix u = embed(gate.unitary, qs, num_qubits);
  // Uniform average over the 16 two-qubit Paulis replaces the gate qubits by
  // identity/4 and keeps the reduced state of the rest.
  const std::array<Eigen::Matrix2cd, 4> paulis{Eigen::Matrix2cd::Identity(), pauli_x(), pauli_y(), pauli_z()};
  Matrix twirled = Matrix::Zero(m.rows(), m.cols());
  for (const auto& a : paulis) {
    for (const auto& b : paulis) {
      Eigen::Matrix4cd ab;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ab.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
      twirled += conjugate(m, embed(ab, qs, num_qubits));
    }
  }
  return p_g * conjugate(m, u) + (1.0 - p_g) / 16.0 * twirled;
}

Matrix dissipate(const Matrix& m, double p_c, int q0, int q1, int num_qubits) {
  const std::array<int, 1> a{q0}, b{q1};
  const std::array<int, 2> ab{q0, q1};
  const Matrix za = embed(pauli_z(), a, num_qubits);
  const Matrix zb = embed(pauli_z(), b, num_qubits);
  const double q = 1.0 - p_c;
  const Matrix mixed = p_c * p_c * m + q * q * conjugate(m, za * zb) +
                       p_c * q * (conjugate(m, za) + conjugate(m, zb));
  return conjugate(mixed, embed(cz(), ab, num_qubits));
}

}  // namespace detail

DensityMatrix apply_depolarizing_gate(const DensityMatrix& chi, double p_g, const TwoQubitGate& gate) {
  if (!(p_g >= 0.0 && p_g <= 1.0)) throw std::domain_error("gate quality must lie in [0, 1]");
  return DensityMatrix(detail::depolarize(chi.matrix(), p_g, gate, chi.num_qubits()));
}

DensityMatrix apply_dissipative_gate(const DensityMatrix& chi, double p_c, int q0, int q1) {
  if (!(p_c >= 0.5 && p_c <= 1.0)) throw std::domain_error("no-flip probability must lie in [1/2, 1]");
  return DensityMatrix(detail::dissipate(chi.matrix(), p_c, q0, q1, chi.num_qubits()));
}

}  // namespace qrk::oracle
