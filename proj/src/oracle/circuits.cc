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

#include "qrk/oracle/circuits.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qrk::oracle {
namespace {

constexpr int kRegister = 4;

Matrix on(const Eigen::Matrix2cd& op, int q) {
  const std::array<int, 1> qs{q};
  return embed(op, qs, kRegister);
}

Matrix projector(int q, int b) {
  Eigen::Matrix2cd p = Eigen::Matrix2cd::Zero();
  p(b, b) = 1;
  return on(p, q);
}

// Two-qubit gate on (control, target) under the chosen noise model. The
// dissipative CNOT is a CZ conjugated by Hadamards on the target, with the
// phase errors acting next to the CZ.
Matrix noisy_cnot(const Matrix& m, const GateModel& model, int control, int target) {
  const std::array<int, 2> qs{control, target};
  switch (model.kind) {
    case GateModel::Kind::kIdeal:
      return detail::conjugate(m, embed(cnot(), qs, kRegister));
    case GateModel::Kind::kDepolarizing:
      return detail::depolarize(m, model.parameter, {cnot(), control, target}, kRegister);
    case GateModel::Kind::kDissipative: {
      const Matrix h = on(hadamard(), target);
      Matrix out = detail::conjugate(m, h);
      out = detail::dissipate(out, model.parameter, control, target, kRegister);
      return detail::conjugate(out, h);
    }
  }
  throw std::logic_error("unknown gate model");
}

void check_model(const GateModel& model) {
  const double p = model.parameter;
  if (model.kind == GateModel::Kind::kDepolarizing && !(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("gate quality must lie in [0, 1]");
  }
  if (model.kind == GateModel::Kind::kDissipative && !(p >= 0.5 && p <= 1.0)) {
    throw std::domain_error("no-flip probability must lie in [1/2, 1]");
  }
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

CircuitOutcome ed_oracle(const DensityMatrix& pair, const GateModel& model) {
  if (pair.dim() != 4) throw std::domain_error("distillation input must be a pair");
  check_model(model);
  // Register a1 b1 a2 b2; Alice holds a1, a2 and Bob b1, b2.
  Matrix m = pair.tensor(pair).matrix();
  const double half_pi = std::numbers::pi / 2;
  const Matrix rot = on(rotation_x(half_pi), 0) * on(rotation_x(-half_pi), 1) * on(rotation_x(half_pi), 2) *
                     on(rotation_x(-half_pi), 3);
  m = detail::conjugate(m, rot);
  m = noisy_cnot(m, model, 0, 2);
  m = noisy_cnot(m, model, 1, 3);

  const std::array<int, 2> keep{0, 1};
  Matrix kept = Matrix::Zero(4, 4);
  for (int b = 0; b < 2; ++b) {
    const Matrix proj = projector(2, b) * projector(3, b);
    kept += partial_trace_keep(proj * m * proj, keep, kRegister);
  }
  const double p = kept.trace().real();
  if (!(p > 1e-15)) throw std::domain_error("distillation success probability vanishes");
  return {DensityMatrix(hermitize(kept / p)), p};
}

DensityMatrix es_oracle(const DensityMatrix& left, const DensityMatrix& right, const GateModel& model) {
  if (left.dim() != 4 || right.dim() != 4) throw std::domain_error("swap inputs must be pairs");
  check_model(model);
  // Register a b c d with (a, b) = left and (c, d) = right.
  Matrix m = noisy_cnot(left.tensor(right).matrix(), model, 1, 2);

  Eigen::Vector2cd plus, minus;
  plus << 1, 1;
  minus << 1, -1;
  plus /= kSqrt2;
  minus /= kSqrt2;
  const std::array<Eigen::Matrix2cd, 2> b_proj{plus * plus.adjoint(), minus * minus.adjoint()};
  const std::array<int, 2> keep{0, 3};
  Matrix out = Matrix::Zero(4, 4);
  for (int mb = 0; mb < 2; ++mb) {
    for (int mc = 0; mc < 2; ++mc) {
      const Matrix meas = on(b_proj[mb], 1) * projector(2, mc);
      Eigen::Matrix2cd fix = Eigen::Matrix2cd::Identity();
      if (mc) fix = pauli_x() * fix;
      if (mb) fix = fix * pauli_z();
      const Matrix corr = on(fix, 3) * meas;
      out += partial_trace_keep(corr * m * corr.adjoint(), keep, kRegister);
    }
  }
  return DensityMatrix(hermitize(out));
}

double chsh_oracle(const DensityMatrix& pair) {
  if (pair.dim() != 4) throw std::domain_error("CHSH needs a pair");
  const Eigen::Matrix2cd x = pauli_x(), z = pauli_z();
  const std::array<Eigen::Matrix2cd, 2> a{(x + z) / kSqrt2, (x - z) / kSqrt2};
  const std::array<Eigen::Matrix2cd, 2> b{x, z};
  double s = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Eigen::Matrix4cd ab;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) ab.block(2 * r, 2 * c, 2, 2) = a[i](r, c) * b[j];
      const double e = (pair.matrix() * ab).trace().real();
      s += (i * j == 1 ? -1.0 : 1.0) * e;
    }
  }
  return s;
}

Marginals mismatch_oracle(const DensityMatrix& pair) {
  if (pair.dim() != 4) throw std::domain_error("marginals need a pair");
  const Matrix& m = pair.matrix();
  const double z = m(1, 1).real() + m(2, 2).real();
  Eigen::Matrix4cd hh;
  const Eigen::Matrix2cd h = hadamard();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) hh.block(2 * r, 2 * c, 2, 2) = h(r, c) * h;
  const Matrix mx = hh * m * hh.adjoint();
  const double x = mx(1, 1).real() + mx(2, 2).real();
  return {z, x};
}

}  // namespace qrk::oracle
