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

#include "qrk/oqr.h"

#include "checks.h"

namespace qrk {

BellDiagonalState initial_state_oqr(double f0) {
  internal::require_closed(f0, 0.25, 1.0, "initial fidelity");
  const double rest = (1.0 - f0) / 3.0;
  return BellDiagonalState(f0, rest, rest, rest);
}

EdOutcome ed_round_oqr(const BellDiagonalState& s, double p_g) {
  internal::require_probability(p_g, "gate quality");
  const double c1 = s.c1(), c2 = s.c2(), c3 = s.c3(), c4 = s.c4();
  const double p2 = p_g * p_g;
  const double bias = 2.0 * c1 + 2.0 * c4 - 1.0;
  const double p_success = 0.5 * (1.0 + p2 * bias * bias);
  if (p_success <= 1e-15) {
    internal::domain_fail("degenerate distillation round, success probability ", p_success);
  }
  const double norm = 1.0 / (8.0 * p_success);
  std::array<double, 4> out{
      norm * (1.0 + p2 * (8.0 * c1 * c1 + 8.0 * c4 * c4 - 1.0)),
      norm * (1.0 - p2 * (1.0 - 16.0 * c1 * c4)),
      norm * (1.0 + p2 * (8.0 * c2 * c2 + 8.0 * c3 * c3 - 1.0)),
      norm * (1.0 - p2 * (1.0 - 16.0 * c2 * c3)),
  };
  return {BellDiagonalState(out), p_success};
}

BellDiagonalState es_level_oqr(const BellDiagonalState& s, double p_g) {
  internal::require_probability(p_g, "gate quality");
  const double c1 = s.c1(), c2 = s.c2(), c3 = s.c3(), c4 = s.c4();
  const double white = (1.0 - p_g) / 4.0;
  std::array<double, 4> out{
      white + p_g * (c1 * c1 + c2 * c2 + c3 * c3 + c4 * c4),
      white + 2.0 * p_g * (c1 * c2 + c3 * c4),
      white + 2.0 * p_g * (c1 * c3 + c2 * c4),
      white + 2.0 * p_g * (c1 * c4 + c2 * c3),
  };
  return BellDiagonalState(out);
}

double es_success_oqr(double eta_d) {
  internal::require_probability(eta_d, "detector efficiency");
  return eta_d * eta_d;
}

}  // namespace qrk
