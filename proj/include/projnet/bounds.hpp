// Copyright 2026 The projnet Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "projnet/error.hpp"
#include "projnet/metrics.hpp"
#include "projnet/rational.hpp"
#include "projnet/topology.hpp"

namespace projnet {

/// Vertices reachable within k steps in an ideal Delta-regular tree,
/// 1 + sum_{t=1..k} Delta (Delta-1)^(t-1). Defined for every Delta >= 1.
inline Integer moore_sum(std::uint64_t Delta, std::uint64_t k) {
  Integer total = 1, layer = Delta;
  for (std::uint64_t t = 1; t <= k; ++t) {
    total += layer;
    layer *= Delta - 1;
  }
  return total;
}

/// Moore bound (Delta (Delta-1)^k - 2) / (Delta - 2) on the order of a graph
/// with maximum degree Delta and diameter k.
inline Integer moore_bound(std::uint64_t Delta, std::uint64_t k) {
  detail::require(Delta >= 3, "moore_bound requires Delta >= 3");
  detail::require(k >= 1, "moore_bound requires k >= 1");
  Integer power = 1;
  for (std::uint64_t i = 0; i < k; ++i) power *= Delta - 1;
  const Integer value = (Integer(Delta) * power - 2) / (Delta - 2);
  detail::ensure(value == moore_sum(Delta, k), "moore bound closed form disagrees with layer sum");
  return value;
}

/// True when every vertex sees full Moore layers Delta (Delta-1)^(t-1) up to
/// distance k-1 and the remaining N - M(Delta, k-1) vertices at distance k.
inline bool generalized_moore_check(const Topology& g) {
  detail::require(g.is_regular(), "generalized Moore check requires a regular graph");
  const std::uint64_t Delta = g.max_degree();
  const std::uint64_t N = g.num_vertices();
  for (std::uint32_t v = 0; v < N; ++v) {
    const auto W = vertex_distance_distribution(g, v);
    const std::uint64_t k = W.size() - 1;
    Integer layer = Delta;
    for (std::uint64_t t = 1; t + 1 <= k; ++t) {
      if (Integer(W[t]) != layer) return false;
      layer *= Delta - 1;
    }
    if (k >= 1 && Integer(W[k]) != Integer(N) - moore_sum(Delta, k - 1)) return false;
  }
  return true;
}

/// Average distance of a generalized Moore graph, k - Delta^(k-1) / N.
inline double gm_avg_distance_approx(double Delta, std::uint64_t k, double N) {
  detail::require(Delta >= 1 && k >= 1 && N >= 2, "gm_avg_distance_approx: invalid arguments");
  const double p = std::pow(Delta, static_cast<double>(k - 1));
  detail::require(N > p, "gm_avg_distance_approx requires N > Delta^(k-1)");
  return static_cast<double>(k) - p / N;
}

/// Largest terminal count reachable with radix R at diameter k and average
/// distance kbar: R^k kbar^(k-1) / ((k - kbar) (kbar + 1)^k).
inline double terminal_bound(double R, std::uint64_t k, double kbar) {
  detail::require(R > 0 && kbar > 0, "terminal_bound requires positive R and kbar");
  detail::require(kbar < static_cast<double>(k), "terminal_bound requires kbar < k");
  const double kd = static_cast<double>(k);
  return std::pow(R, kd) * std::pow(kbar, kd - 1) / ((kd - kbar) * std::pow(kbar + 1, kd));
}

/// Leaf bound of a diameter-2-between-leaves indirect network:
/// L <= 1 + delta^2 + (Delta - delta)(R - 1).
inline Integer indirect_leaf_bound(std::uint64_t Delta, std::uint64_t delta, std::uint64_t R) {
  detail::require(delta <= Delta && Delta <= R, "indirect_leaf_bound requires delta <= Delta <= R");
  return Integer(1) + Integer(delta) * delta + Integer(Delta - delta) * (R - 1);
}

}  // namespace projnet
