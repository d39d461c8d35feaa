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

#include "qrk/bell.h"

#include <cmath>
#include <sstream>

#include "checks.h"

namespace qrk {

BellDiagonalState::BellDiagonalState(double c1, double c2, double c3, double c4) : c_{c1, c2, c3, c4} {
  double sum = 0.0;
  for (double& c : c_) {
    if (!std::isfinite(c)) {
      internal::domain_fail("Bell weight is not finite: ", str());
    }
    if (c < -kClampTolerance) {
      internal::domain_fail("negative Bell weight ", c, " in ", str());
    }
    if (c < 0.0) {
      c = 0.0;
    }
    sum += c;
  }
  if (std::abs(sum - 1.0) > kNormTolerance) {
    internal::domain_fail("Bell weights sum to ", sum, " instead of 1: ", str());
  }
}

BellDiagonalState BellDiagonalState::normalized(const std::array<double, 4>& w) {
  double sum = w[0] + w[1] + w[2] + w[3];
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    internal::domain_fail("cannot normalize Bell weights with sum ", sum);
  }
  return BellDiagonalState(w[0] / sum, w[1] / sum, w[2] / sum, w[3] / sum);
}

std::string BellDiagonalState::str() const {
  std::ostringstream os;
  os.precision(17);
  os << "(" << c_[0] << ", " << c_[1] << ", " << c_[2] << ", " << c_[3] << ")";
  return os.str();
}

double binary_entropy(double p) {
  if (!(p >= -kClampTolerance && p <= 1.0 + kClampTolerance)) {
    internal::domain_fail("binary entropy argument must lie in [0, 1], got ", p);
  }
  if (p <= 0.0 || p >= 1.0) {
    return 0.0;
  }
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

Qber qber_xz(const BellDiagonalState& s) { return {s.c2() + s.c4(), s.c3() + s.c4()}; }

BellDiagonalState apply_detector_noise(const BellDiagonalState& s, double eta_d) {
  internal::require_probability(eta_d, "detector efficiency");
  const double keep = eta_d * eta_d;
  const double white = (1.0 - keep) / 4.0;
  return BellDiagonalState(keep * s.c1() + white, keep * s.c2() + white, keep * s.c3() + white,
                           keep * s.c4() + white);
}

double chsh_value(const BellDiagonalState& s) { return kTsirelson * (s.c1() - s.c4()); }

DiObservables di_observables(const BellDiagonalState& s, double eta_d) {
  internal::require_probability(eta_d, "detector efficiency");
  const double keep = eta_d * eta_d;
  return {keep * (s.c3() + s.c4()) + (1.0 - keep) / 2.0, kTsirelson * keep * (s.c1() - s.c4())};
}

}  // namespace qrk
