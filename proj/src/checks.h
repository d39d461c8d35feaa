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

#ifndef QRK_SRC_CHECKS_H_
#define QRK_SRC_CHECKS_H_

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qrk::internal {

template <typename... Args>
[[noreturn]] void domain_fail(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  throw std::domain_error(os.str());
}

// Requires lo <= x <= hi (both inclusive).
inline void require_closed(double x, double lo, double hi, const char* name) {
  if (!(x >= lo && x <= hi)) {
    domain_fail(name, " must lie in [", lo, ", ", hi, "], got ", x);
  }
}

// Requires lo < x <= hi.
inline void require_half_open(double x, double lo, double hi, const char* name) {
  if (!(x > lo && x <= hi)) {
    domain_fail(name, " must lie in (", lo, ", ", hi, "], got ", x);
  }
}

inline void require_probability(double x, const char* name) { require_closed(x, 0.0, 1.0, name); }

}  // namespace qrk::internal

#endif  // QRK_SRC_CHECKS_H_
