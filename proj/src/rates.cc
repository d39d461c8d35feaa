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

#include "qrk/rates.h"

#include <cmath>
#include <limits>

#include "checks.h"

namespace qrk {
namespace {

constexpr int kMaxNestingLevel = 20;
// Relative accuracy demanded from the alternating sum before falling back.
constexpr double kAlternatingTolerance = 1e-11;
constexpr double kTailTolerance = 1e-12;
constexpr double kMaxSeriesTerms = 1e8;

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Returns NaN when cancellation leaves fewer than ~11 reliable digits.
double zn_alternating(double segments, double log_q) {
  CompensatedSum sum;
  double magnitude = 0.0;
  double binom = 1.0;
  const int count = static_cast<int>(segments);
  for (int j = 1; j <= count; ++j) {
    binom = binom * (count - j + 1) / j;
    const double denom = -std::expm1(j * log_q);  // 1 - (1-p)^j
    const double term = binom / denom;
    magnitude += term;
    sum.add(j % 2 == 1 ? term : -term);
  }
  const double value = sum.value();
  const double error_bound = magnitude * std::numeric_limits<double>::epsilon() * count;
  if (!(value > 0.0) || error_bound > kAlternatingTolerance * value) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return value;
}

// E[max of N geometrics] = sum_{m>=0} P(max > m) = sum_{m>=0} 1 - (1 - q^m)^N.
double zn_tail_series(double segments, double p, double log_q) {
  // Each term is bounded by N q^m, so the tail after m is at most N q^m / p.
  const double z_lower = 1.0 / p;
  const double needed = std::log(segments / (p * kTailTolerance * z_lower)) / -log_q;
  if (!(needed < kMaxSeriesTerms)) {
    internal::domain_fail("Z_n evaluation would need ~", needed,
                          " series terms; link probability too small for this nesting level");
  }
  CompensatedSum sum;
  for (long m = 0;; ++m) {
    const double qm = std::exp(m * log_q);
    const double term = -std::expm1(segments * std::log1p(-qm));
    sum.add(term);
    if (segments * qm / p <= kTailTolerance * sum.value()) {
      break;
    }
  }
  return sum.value();
}

}  // namespace

LinkBudget LinkBudget::make(double l0_km, double alpha, double c_fiber) {
  if (!(l0_km > 0.0) || !std::isfinite(l0_km)) {
    internal::domain_fail("segment length must be positive, got ", l0_km);
  }
  if (!(c_fiber > 0.0)) {
    internal::domain_fail("fiber light speed must be positive, got ", c_fiber);
  }
  return {l0_km, alpha, c_fiber, 2.0 * l0_km * 1e3 / c_fiber, transmittivity(l0_km, alpha)};
}

double transmittivity(double l0_km, double alpha) {
  if (!(l0_km >= 0.0)) {
    internal::domain_fail("segment length must be non-negative, got ", l0_km);
  }
  if (!(alpha > 0.0)) {
    internal::domain_fail("attenuation must be positive, got ", alpha);
  }
  return std::pow(10.0, -alpha * l0_km / 10.0);
}

double zn(int n, double p) {
  if (n < 0 || n > kMaxNestingLevel) {
    internal::domain_fail("nesting level must lie in [0, ", kMaxNestingLevel, "], got ", n);
  }
  internal::require_half_open(p, 0.0, 1.0, "link probability");
  if (p == 1.0) {
    return 1.0;
  }
  if (n == 0) {
    return 1.0 / p;
  }
  const double segments = std::ldexp(1.0, n);
  const double log_q = std::log1p(-p);
  if (n <= 6) {
    const double value = zn_alternating(segments, log_q);
    if (!std::isnan(value)) {
      return value;
    }
  }
  return zn_tail_series(segments, p, log_q);
}

double a_constant(double p) {
  internal::require_half_open(p, 0.0, 1.0, "link probability");
  return (1.0 - 2.0 * p / 3.0) / (1.0 - p / 2.0);
}

DistilledLink distilled_link_probability(double p0, std::span<const double> p_ed) {
  internal::require_half_open(p0, 0.0, 1.0, "elementary link probability");
  DistilledLink link{p0, p0, {p_ed.begin(), p_ed.end()}, {}};
  link.a_ed.reserve(p_ed.size());
  for (double p : p_ed) {
    internal::require_half_open(p, 0.0, 1.0, "distillation success probability");
    link.a_ed.push_back(a_constant(link.p_l0));
    link.p_l0 = p / zn(1, link.p_l0);
  }
  return link;
}

double deterministic_rate(const LinkBudget& budget, int n, double p_l0) {
  return 1.0 / (budget.t0_s * zn(n, p_l0));
}

RateTrace probabilistic_rate(const LinkBudget& budget, int n, const DistilledLink& link,
                             std::span<const double> p_es) {
  if (n < 0 || static_cast<std::size_t>(n) != p_es.size()) {
    internal::domain_fail("need one swap success probability per nesting level: n = ", n, ", got ",
                          p_es.size());
  }
  internal::require_half_open(link.p_l0, 0.0, 1.0, "distilled link probability");
  RateTrace trace;
  trace.p0 = link.p0;
  trace.p_l0 = link.p_l0;
  trace.p_ed = link.p_ed;
  trace.a_ed = link.a_ed;
  trace.p_es.assign(p_es.begin(), p_es.end());
  trace.approx_warning = link.p_l0 > kApproxWarningThreshold;

  double level_p = link.p_l0;  // P_{i-1}
  for (double p : p_es) {
    internal::require_half_open(p, 0.0, 1.0, "swap success probability");
    const double a = a_constant(level_p);
    trace.a_es.push_back(a);
    const double waiting_pair = 1.5 * a / level_p;  // <ñ_{i-1}>
    level_p = p / waiting_pair;                     // P_i = 1 / <n_i>
  }
  trace.rate_hz = level_p / budget.t0_s;
  return trace;
}

RateTrace oqr_probabilistic_rate(const LinkBudget& budget, int n, double eta_d,
                                 std::span<const double> p_ed_prime) {
  internal::require_half_open(eta_d, 0.0, 1.0, "detector efficiency");
  const double click = eta_d * eta_d;
  std::vector<double> p_ed;
  p_ed.reserve(p_ed_prime.size());
  for (double p : p_ed_prime) {
    p_ed.push_back(click * p);
  }
  const DistilledLink link = distilled_link_probability(budget.eta_t, p_ed);
  if (n < 0) {
    internal::domain_fail("nesting level must be non-negative, got ", n);
  }
  const std::vector<double> p_es(static_cast<std::size_t>(n), click);
  return probabilistic_rate(budget, n, link, p_es);
}

}  // namespace qrk
