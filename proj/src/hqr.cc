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

#include "qrk/hqr.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "checks.h"

namespace qrk {

HqrGateParams HqrGateParams::from_p_c(double p_c) {
  internal::require_closed(p_c, 0.5, 1.0, "no-flip probability");
  return {std::numeric_limits<double>::quiet_NaN(), p_c, 2.0 * p_c * (p_c - 1.0)};
}

BellDiagonalState initial_state_hqr(double f0) {
  internal::require_probability(f0, "initial fidelity");
  return BellDiagonalState(f0, 1.0 - f0, 0.0, 0.0);
}

HqrGateParams p_no_flip(double p_g) {
  internal::require_half_open(p_g, 0.0, 1.0, "gate quality");
  const double exponent = -std::numbers::pi * (1.0 - p_g * p_g) / (2.0 * std::sqrt(p_g) * (1.0 + p_g));
  const double p_c = 0.5 * (1.0 + std::exp(exponent));
  return {p_g, p_c, 2.0 * p_c * (p_c - 1.0)};
}

EdOutcome ed_round_hqr(const BellDiagonalState& s, const HqrGateParams& params) {
  const double c1 = s.c1(), c2 = s.c2(), c3 = s.c3(), c4 = s.c4();
  const double pb = params.p_bar;
  const double pb2 = pb * pb;
  const double q = pb + 1.0;
  const double bias = 2.0 * c1 + 2.0 * c4 - 1.0;
  const double p_success = (c1 + c4) * (c1 + c4) + (c2 + c3) * (c2 + c3) + pb * bias * bias;
  if (p_success <= 1e-15) {
    internal::domain_fail("degenerate distillation round, success probability ", p_success);
  }
  const std::array<double, 4> num{
      pb2 * (c1 - c4) * (c1 - c4 + c2 - c3) +
          pb * (c1 * c1 + c4 * c4 + (c1 - c4) * (c1 - c4) - c1 * c3 - c2 * c4) + c1 * c1 + c4 * c4,
      pb2 * (c1 * c3 + (c2 - c3 - c4) * c4) - pb * (c3 + c4) * c4 + 2.0 * q * q * c1 * c4 -
          pb * q * c1 * (c1 + c2),
      pb2 * (c1 * c2 + c3 * c4) + q * q * (c2 * c2 + c3 * c3) -
          pb * q * (c2 * (c3 + c4) + (c1 + c2) * c3),
      pb2 * (c2 * c4 + (c1 - c3 - c4) * c3) - pb * c3 * (c3 + c4) + 2.0 * q * q * c2 * c3 -
          pb * q * (c1 + c2) * c2,
  };
  return {BellDiagonalState(num[0] / p_success, num[1] / p_success, num[2] / p_success,
                            num[3] / p_success),
          p_success};
}

BellDiagonalState es_level_hqr(const BellDiagonalState& s, const HqrGateParams& params) {
  const double c1 = s.c1(), c2 = s.c2(), c3 = s.c3(), c4 = s.c4();
  const double pc = params.p_c;
  const double pc2 = pc * pc;
  const double bias = 2.0 * c1 + 2.0 * c4 - 1.0;
  const double b2 = bias * bias;
  const double squares = c1 * c1 + c2 * c2 + c3 * c3 + c4 * c4;
  const double cross = 2.0 * (c1 - c4) * (c2 - c3);
  return BellDiagonalState(
      2.0 * (c1 * c4 + c2 * c3) +
          2.0 * pc * (c1 * (1.0 - c1 - 3.0 * c4) - c2 * (c3 - c4) - (c2 - c4) * c3) + pc2 * b2,
      2.0 * (c1 * c3 + c2 * c4) + pc * (b2 + cross) - pc2 * b2,
      2.0 * (c1 * c2 + c3 * c4) + pc * (b2 - cross) - pc2 * b2,
      squares - 2.0 * pc * (squares - (c1 + c4) * (c2 + c3)) + pc2 * b2);
}

double p0_hqr(double f0, double eta_t, double eta_d) {
  internal::require_closed(f0, 0.5, 1.0, "initial fidelity");
  internal::require_half_open(eta_t, 0.0, 1.0, "transmittivity");
  internal::require_half_open(eta_d, 0.0, 1.0, "detector efficiency");
  const double denom = 1.0 + eta_t * (1.0 - 2.0 * eta_d);
  if (denom <= 0.0) {
    internal::domain_fail("link probability exponent undefined: 1 + eta_t (1 - 2 eta_d) = ", denom);
  }
  return 1.0 - std::pow(2.0 * f0 - 1.0, eta_t * eta_d / denom);
}

}  // namespace qrk
