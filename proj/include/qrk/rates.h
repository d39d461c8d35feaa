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

#ifndef QRK_RATES_H_
#define QRK_RATES_H_

#include <span>
#include <vector>

namespace qrk {

inline constexpr double kDefaultAttenuation = 0.17;  // dB/km
inline constexpr double kDefaultFiberSpeed = 2e8;    // m/s

/// Elementary segment: length, loss and heralding round-trip time.
/// Lengths are in km, times in seconds.
struct LinkBudget {
  double l0_km;
  double alpha_db_per_km;
  double c_fiber_m_per_s;
  double t0_s;   // 2 L0 / c
  double eta_t;  // 10^(-alpha L0 / 10)

  /// Requires l0 > 0, alpha > 0, c > 0.
  static LinkBudget make(double l0_km, double alpha_db_per_km = kDefaultAttenuation,
                         double c_fiber_m_per_s = kDefaultFiberSpeed);
};

/// Outcome of the distillation-stage recursion at nesting level 0.
struct DistilledLink {
  double p0;                  // elementary link probability
  double p_l0;                // link probability after all distillation rounds
  std::vector<double> p_ed;   // per-round distillation success probability
  std::vector<double> a_ed;   // a-constants of the link probability entering each round
};

/// Everything that went into a repeater rate.
struct RateTrace {
  double p0 = 0.0;
  double p_l0 = 0.0;
  std::vector<double> p_ed;
  std::vector<double> a_ed;
  std::vector<double> p_es;
  std::vector<double> a_es;
  double rate_hz = 0.0;
  /// Set when the link probability exceeds the regime where the
  /// probabilistic-swap approximation is accurate (p_l0 > 0.2).
  bool approx_warning = false;
};

inline constexpr double kApproxWarningThreshold = 0.2;

/// 10^(-alpha l0 / 10).
double transmittivity(double l0_km, double alpha_db_per_km = kDefaultAttenuation);

/// Mean number of attempts until all 2^n independent links, each heralded
/// with probability p per attempt, exist simultaneously:
///   Z_n(p) = sum_{j=1}^{2^n} C(2^n, j) (-1)^(j+1) / (1 - (1-p)^j).
/// n in [0, 20], p in (0, 1].
double zn(int n, double p);

/// (1 - 2p/3) / (1 - p/2) for p in (0, 1].
double a_constant(double p);

/// Iterates P^(j) = p_ed[j-1] / Z_1(P^(j-1)) from P^(0) = p0.
DistilledLink distilled_link_probability(double p0, std::span<const double> p_ed);

/// Deterministic swapping: 1 / (T0 Z_n(p_l0)).
double deterministic_rate(const LinkBudget& budget, int n, double p_l0);

/// Probabilistic swapping. Runs the per-level waiting-time recursion
///   <n_i> = <ñ_{i-1}> / P_ES^(i),  <ñ_i> = (3/2) a(P_i) <n_i>,  P_i = 1/<n_i>
/// starting from P_0 = link.p_l0, and returns 1 / (T0 <n_N>) together with
/// the intermediates. p_es holds one success probability per level.
RateTrace probabilistic_rate(const LinkBudget& budget, int n, const DistilledLink& link,
                             std::span<const double> p_es);

/// Original repeater with detectors of efficiency eta_d in (0, 1]:
/// P0 = eta_t(L0), P_ED^(j) = eta_d^2 P'_ED^(j), P_ES = eta_d^2.
RateTrace oqr_probabilistic_rate(const LinkBudget& budget, int n, double eta_d,
                                 std::span<const double> p_ed_prime);

}  // namespace qrk

#endif  // QRK_RATES_H_
