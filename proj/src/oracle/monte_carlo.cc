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

#include "qrk/oracle/monte_carlo.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qrk::oracle {
namespace {

using Rng = std::mt19937_64;

class WaitForAll {
 public:
  WaitForAll(double p0, std::span<const double> p_es, Rng& rng)
      : link_(p0), p_es_(p_es), rng_(rng) {}

  std::uint64_t run(int level) {
    // Attempts are counted from 1, so the first success at attempt k costs k.
    if (level == 0) return link_(rng_) + 1;
    std::bernoulli_distribution swap(p_es_[level - 1]);
    std::uint64_t t = 0;
    do {
      const std::uint64_t left = run(level - 1);
      const std::uint64_t right = run(level - 1);
      t += std::max(left, right);
    } while (!swap(rng_));
    return t;
  }

 private:
  std::geometric_distribution<std::uint64_t> link_;
  std::span<const double> p_es_;
  Rng& rng_;
};

class ImmediateSwap {
 public:
  ImmediateSwap(double p0, std::span<const double> p_es, int n, Rng& rng)
      : link_(p0), p_es_(p_es), segments_(std::size_t{1} << n), rng_(rng) {}

  std::uint64_t run() {
    const std::size_t m = segments_;
    // Right end (exclusive) of the link starting at segment s, or 0 if s does
    // not start a link. Segments inside a link are marked busy.
    end_.assign(m, 0);
    busy_.assign(m, false);
    ready_.assign(m, 0);
    for (std::size_t s = 0; s < m; ++s) ready_[s] = link_(rng_) + 1;
    for (;;) {
      const std::uint64_t now = next_event();
      for (std::size_t s = 0; s < m; ++s) {
        if (!busy_[s] && ready_[s] == now) {
          busy_[s] = true;
          end_[s] = s + 1;
        }
      }
      merge_all(now);
      if (end_[0] == m) return now;
    }
  }

 private:
  std::uint64_t next_event() const {
    std::uint64_t t = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t s = 0; s < segments_; ++s) {
      if (!busy_[s]) t = std::min(t, ready_[s]);
    }
    return t;
  }

  void release(std::size_t begin, std::size_t end, std::uint64_t now) {
    for (std::size_t s = begin; s < end; ++s) {
      busy_[s] = false;
      end_[s] = 0;
      ready_[s] = now + link_(rng_) + 1;
    }
  }

  void merge_all(std::uint64_t now) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::size_t s = 0;
      while (s < segments_) {
        if (end_[s] == 0) {
          ++s;
          continue;
        }
        const std::size_t mid = end_[s];
        if (mid < segments_ && end_[mid] != 0) {
          const std::size_t stop = end_[mid];
          end_[mid] = 0;
          const std::size_t span = stop - s;
          const int level = std::bit_width(span - 1);  // ceil(log2(span))
          std::bernoulli_distribution swap(p_es_[std::min<std::size_t>(level, p_es_.size()) - 1]);
          if (swap(rng_)) {
            end_[s] = stop;
          } else {
            release(s, stop, now);
          }
          changed = true;
          break;
        }
        s = mid;
      }
    }
  }

  std::geometric_distribution<std::uint64_t> link_;
  std::span<const double> p_es_;
  std::size_t segments_;
  Rng& rng_;
  std::vector<std::size_t> end_;
  std::vector<bool> busy_;
  std::vector<std::uint64_t> ready_;
};

struct ChunkResult {
  std::uint64_t sum = 0;
  double sum_sq = 0.0;
};

}  // namespace

std::string to_string(Strategy s) { return s == Strategy::kWaitForAll ? "waitall" : "immediate"; }

Strategy parse_strategy(const std::string& name) {
  if (name == "waitall") return Strategy::kWaitForAll;
  if (name == "immediate") return Strategy::kImmediateSwap;
  throw std::invalid_argument("unknown strategy '" + name + "' (expected waitall or immediate)");
}

McEstimate mc_repeater(double p0, std::span<const double> p_es, int n, std::uint64_t trials,
                       std::uint64_t seed, Strategy strategy, int chunks) {
  if (!(p0 > 0.0 && p0 <= 1.0)) throw std::domain_error("link probability must lie in (0, 1]");
  if (n < 0 || n > 16) throw std::domain_error("nesting level must lie in [0, 16]");
  if (p_es.size() != static_cast<std::size_t>(n)) {
    throw std::domain_error("need one swap success probability per nesting level");
  }
  for (double p : p_es) {
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("swap success probability must lie in (0, 1]");
  }
  if (trials < 2) throw std::domain_error("need at least two trials");
  if (chunks < 1) throw std::domain_error("need at least one chunk");

  std::vector<ChunkResult> results(static_cast<std::size_t>(chunks));
  auto work = [&](int chunk) {
    const std::uint64_t begin = trials * static_cast<std::uint64_t>(chunk) / chunks;
    const std::uint64_t end = trials * static_cast<std::uint64_t>(chunk + 1) / chunks;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk)};
    Rng rng(seq);
    ChunkResult r;
    WaitForAll tree(p0, p_es, rng);
    ImmediateSwap chain(p0, p_es, n, rng);
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t t = strategy == Strategy::kWaitForAll ? tree.run(n) : chain.run();
      r.sum += t;
      r.sum_sq += static_cast<double>(t) * static_cast<double>(t);
    }
    results[static_cast<std::size_t>(chunk)] = r;
  };

  const int workers = std::max(1, std::min<int>(chunks, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int c = w; c < chunks; c += workers) work(c);
    });
  }
  for (auto& t : pool) t.join();

  std::uint64_t sum = 0;
  double sum_sq = 0.0;
  for (const auto& r : results) {
    sum += r.sum;
    sum_sq += r.sum_sq;
  }
  const double count = static_cast<double>(trials);
  const double mean = static_cast<double>(sum) / count;
  const double var = std::max(0.0, (sum_sq - count * mean * mean) / (count - 1.0));
  return {mean, std::sqrt(var / count), trials, strategy, seed};
}

}  // namespace qrk::oracle
