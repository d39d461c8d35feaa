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

#include "qrk/keyrate.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "checks.h"
#include "qrk/hqr.h"
#include "qrk/oqr.h"

namespace qrk {
namespace {

constexpr int kMaxNesting = 20;
constexpr int kMaxRounds = 16;

void validate(const RepeaterConfig& config, const HardwareParams& hw) {
  if (config.n < 0 || config.n > kMaxNesting) {
    internal::domain_fail("nesting level must lie in [0, ", kMaxNesting, "], got ", config.n);
  }
  if (config.k < 0 || config.k > kMaxRounds) {
    internal::domain_fail("distillation rounds must lie in [0, ", kMaxRounds, "], got ", config.k);
  }
  if (!(config.l_total_km > 0.0) || !std::isfinite(config.l_total_km)) {
    internal::domain_fail("total distance must be positive, got ", config.l_total_km);
  }
  internal::require_half_open(config.r_sift, 0.0, 1.0, "sifting ratio");
  internal::require_probability(hw.p_g, "gate quality");
  internal::require_probability(hw.eta_d, "detector efficiency");
  internal::require_probability(hw.f0, "initial fidelity");
}

}  // namespace

std::string_view to_string(Setup setup) { return setup == Setup::kOqr ? "oqr" : "hqr"; }

Setup parse_setup(std::string_view name) {
  if (name == "oqr") return Setup::kOqr;
  if (name == "hqr") return Setup::kHqr;
  throw std::invalid_argument("unknown setup '" + std::string(name) + "', expected oqr or hqr");
}

double RepeaterConfig::l0_km() const { return std::ldexp(l_total_km, -n); }

EvolvedState evolve_state(const RepeaterConfig& config, const HardwareParams& hw) {
  validate(config, hw);
  EvolvedState out;
  out.p_ed_prime.reserve(static_cast<std::size_t>(config.k));
  if (config.setup == Setup::kOqr) {
    out.state = initial_state_oqr(hw.f0);
    for (int j = 0; j < config.k; ++j) {
      const EdOutcome ed = ed_round_oqr(out.state, hw.p_g);
      out.state = ed.state;
      out.p_ed_prime.push_back(ed.p_success);
    }
    for (int i = 0; i < config.n; ++i) {
      out.state = es_level_oqr(out.state, hw.p_g);
    }
  } else {
    const HqrGateParams gate = p_no_flip(hw.p_g);
    out.state = initial_state_hqr(hw.f0);
    for (int j = 0; j < config.k; ++j) {
      const EdOutcome ed = ed_round_hqr(out.state, gate);
      out.state = ed.state;
      out.p_ed_prime.push_back(ed.p_success);
    }
    for (int i = 0; i < config.n; ++i) {
      out.state = es_level_hqr(out.state, gate);
    }
  }
  return out;
}

double secret_fraction_bb84(double q_x, double q_z) {
  return std::max(0.0, 1.0 - binary_entropy(q_z) - binary_entropy(q_x));
}

double secret_fraction_di(double q, double s) {
  if (!(s > 2.0)) {
    return 0.0;
  }
  // Guard against s drifting past the Tsirelson bound by rounding.
  const double w = std::sqrt(std::min(1.0, s * s / 4.0 - 1.0));
  return std::max(0.0, 1.0 - binary_entropy(q) - binary_entropy(0.5 * (1.0 + w)));
}

RateRecord key_rates(const RepeaterConfig& config, const HardwareParams& hw) {
  const EvolvedState evolved = evolve_state(config, hw);
  const LinkBudget budget = LinkBudget::make(config.l0_km(), hw.alpha_db_per_km, hw.c_fiber_m_per_s);

  RateRecord rec;
  rec.state_final = evolved.state;
  const Qber qber = qber_xz(evolved.state);
  const DiObservables di = di_observables(evolved.state, hw.eta_d);
  rec.q_x = qber.q_x;
  rec.q_z = qber.q_z;
  rec.q_z_di = di.q_z;
  rec.s = di.s;
  rec.r_dd = secret_fraction_bb84(qber.q_x, qber.q_z);
  rec.r_di = secret_fraction_di(di.q_z, di.s);

  if (config.setup == Setup::kOqr && hw.eta_d < 1.0) {
    if (hw.eta_d == 0.0) {
      rec.trace.p0 = budget.eta_t;
      rec.trace.p_ed = evolved.p_ed_prime;
    } else {
      rec.trace = oqr_probabilistic_rate(budget, config.n, hw.eta_d, evolved.p_ed_prime);
    }
  } else {
    const double p0 =
        config.setup == Setup::kOqr ? budget.eta_t : p0_hqr(hw.f0, budget.eta_t, hw.eta_d);
    if (p0 > 0.0) {
      const DistilledLink link = distilled_link_probability(p0, evolved.p_ed_prime);
      rec.trace.p0 = link.p0;
      rec.trace.p_l0 = link.p_l0;
      rec.trace.p_ed = link.p_ed;
      rec.trace.a_ed = link.a_ed;
      rec.trace.p_es.assign(static_cast<std::size_t>(config.n), 1.0);
      rec.trace.rate_hz = deterministic_rate(budget, config.n, link.p_l0);
    } else {
      rec.trace.p_ed = evolved.p_ed_prime;
    }
  }
  rec.rate_rep = rec.trace.rate_hz;
  rec.key_dd = rec.rate_rep * hw.eta_d * hw.eta_d * rec.r_dd * config.r_sift;
  rec.key_di = rec.rate_rep * rec.r_di;
  return rec;
}

}  // namespace qrk
