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

#ifndef QRK_KEYRATE_H_
#define QRK_KEYRATE_H_

#include <string_view>
#include <vector>

#include "qrk/bell.h"
#include "qrk/rates.h"

namespace qrk {

enum class Setup { kOqr, kHqr };

std::string_view to_string(Setup setup);
/// Accepts "oqr" or "hqr"; throws std::invalid_argument otherwise.
Setup parse_setup(std::string_view name);

struct RepeaterConfig {
  Setup setup = Setup::kOqr;
  double l_total_km = 600.0;
  int n = 2;  // nesting levels
  int k = 0;  // distillation rounds before the first swap
  /// Sifting ratio; multiplies the device-dependent key rate only.
  double r_sift = 1.0;

  /// L / 2^n.
  double l0_km() const;
};

struct HardwareParams {
  double p_g = 1.0;
  double eta_d = 1.0;
  double f0 = 1.0;
  double alpha_db_per_km = kDefaultAttenuation;
  double c_fiber_m_per_s = kDefaultFiberSpeed;
};

struct RateRecord {
  BellDiagonalState state_final;
  double q_x = 0.0;
  double q_z = 0.0;
  double q_z_di = 0.0;
  double s = 0.0;
  double r_dd = 0.0;  // BB84 secret fraction
  double r_di = 0.0;  // CHSH-based secret fraction
  double rate_rep = 0.0;
  double key_dd = 0.0;
  double key_di = 0.0;
  RateTrace trace;
};

struct EvolvedState {
  BellDiagonalState state;
  std::vector<double> p_ed_prime;
};

/// Source state, then k distillation rounds, then n swap levels.
EvolvedState evolve_state(const RepeaterConfig& config, const HardwareParams& hw);

/// max{0, 1 - h(q_z) - h(q_x)}.
double secret_fraction_bb84(double q_x, double q_z);

/// 0 unless s > 2; otherwise max{0, 1 - h(q) - h((1 + sqrt(s^2/4 - 1))/2)}.
double secret_fraction_di(double q, double s);

/// Full pipeline for one parameter point.
///
/// Rate selection: the original repeater uses deterministic swapping when
/// eta_d == 1 and the probabilistic approximation otherwise; the hybrid
/// repeater always swaps deterministically with P0 from the optical link.
/// A vanishing link probability yields a zero rate, not an error.
RateRecord key_rates(const RepeaterConfig& config, const HardwareParams& hw);

}  // namespace qrk

#endif  // QRK_KEYRATE_H_
