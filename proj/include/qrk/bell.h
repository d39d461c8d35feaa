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

#ifndef QRK_BELL_H_
#define QRK_BELL_H_

#include <array>
#include <cstddef>
#include <string>

namespace qrk {

inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kTsirelson = 2.0 * kSqrt2;

// Tolerance within which slightly negative Bell weights are clamped to zero.
inline constexpr double kClampTolerance = 1e-12;
// Maximum allowed deviation of the Bell weights from unit sum.
inline constexpr double kNormTolerance = 1e-9;

/// Two-qubit state diagonal in the Bell basis.
///
/// The weights are stored in the fixed order
///   phi1 = (|00> + |11>)/sqrt2,  phi2 = (|00> - |11>)/sqrt2,
///   phi3 = (|01> + |10>)/sqrt2,  phi4 = (|01> - |10>)/sqrt2,
/// which every transform in the library indexes by. Instances are always
/// valid: non-negative weights summing to one within kNormTolerance.
class BellDiagonalState {
 public:
  /// The pure state phi1.
  BellDiagonalState() : c_{1.0, 0.0, 0.0, 0.0} {}

  /// Validates and clamps. Throws std::domain_error if a weight is below
  /// -kClampTolerance, is not finite, or the sum is off by more than
  /// kNormTolerance.
  BellDiagonalState(double c1, double c2, double c3, double c4);
  explicit BellDiagonalState(const std::array<double, 4>& c)
      : BellDiagonalState(c[0], c[1], c[2], c[3]) {}

  /// Divides the weights by their sum before validating. For transform
  /// outputs whose numerators are known to be proportional to a state.
  static BellDiagonalState normalized(const std::array<double, 4>& weights);

  double c1() const { return c_[0]; }
  double c2() const { return c_[1]; }
  double c3() const { return c_[2]; }
  double c4() const { return c_[3]; }
  double operator[](std::size_t i) const { return c_[i]; }
  const std::array<double, 4>& coefficients() const { return c_; }

  /// Fidelity with respect to phi1.
  double fidelity() const { return c_[0]; }

  std::string str() const;

  friend bool operator==(const BellDiagonalState&, const BellDiagonalState&) = default;

 private:
  std::array<double, 4> c_;
};

/// Quantum bit error rates of the X and Z measurement settings.
struct Qber {
  double q_x;
  double q_z;
};

/// QBER of the key setting and CHSH value after the no-click substitution.
struct DiObservables {
  double q_z;
  double s;
};

/// h(p) = -p log2 p - (1-p) log2(1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

Qber qber_xz(const BellDiagonalState& state);

/// Mixes the state with white noise: c_i -> eta^2 c_i + (1 - eta^2)/4.
/// Models random assignment of outcomes to no-click events of two detectors.
BellDiagonalState apply_detector_noise(const BellDiagonalState& state, double eta_d);

/// CHSH value 2 sqrt2 (c1 - c4) of a Bell-diagonal state.
double chsh_value(const BellDiagonalState& state);

DiObservables di_observables(const BellDiagonalState& state, double eta_d);

}  // namespace qrk

#endif  // QRK_BELL_H_
