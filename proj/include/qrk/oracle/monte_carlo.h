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

#ifndef QRK_ORACLE_MONTE_CARLO_H_
#define QRK_ORACLE_MONTE_CARLO_H_

#include <cstdint>
#include <span>
#include <string>

namespace qrk::oracle {

/// Scheduling of swaps in the simulated repeater chain.
enum class Strategy {
  /// A level-i swap waits until both level-(i-1) halves exist; a failed swap
  /// discards both halves and the whole subtree is regenerated.
  kWaitForAll,
  /// Adjacent links are swapped as soon as both exist; a failed swap frees
  /// every segment of both links.
  kImmediateSwap,
};

std::string to_string(Strategy s);
/// "waitall" or "immediate". Throws std::invalid_argument otherwise.
Strategy parse_strategy(const std::string& name);

struct McEstimate {
  double mean_attempts;
  double std_error;
  std::uint64_t trials;
  Strategy strategy;
  std::uint64_t seed;
};

/// Mean number of elementary attempts (in units of T0) until an end-to-end
/// pair exists in a chain of 2^n segments. p_es[i] is the swap success
/// probability at nesting level i+1. Trials are split into `chunks`
/// independent streams run in parallel; the result depends only on the seed,
/// trials and chunks, not on thread scheduling.
McEstimate mc_repeater(double p0, std::span<const double> p_es, int n, std::uint64_t trials,
                       std::uint64_t seed, Strategy strategy, int chunks = 16);

}  // namespace qrk::oracle

#endif  // QRK_ORACLE_MONTE_CARLO_H_
