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
#include <optional>
#include <string>

#include "projnet/bounds.hpp"
#include "projnet/metrics.hpp"
#include "projnet/rational.hpp"
#include "projnet/structural_params.hpp"
#include "projnet/topology.hpp"

namespace projnet {

/// Distance and utilization known in closed form, used where building the
/// graph is unnecessary or impossible.
struct ClosedFormMetrics {
  std::uint32_t k = 0;
  Rational kbar;
  Rational u;
  Scope scope = Scope::all;
  /// kbar is an approximation rather than an exact average.
  bool approximate = false;
  /// kbar follows a routing convention instead of true shortest paths.
  std::string convention;
};

namespace detail {

inline ClosedFormMetrics from_layers(const std::vector<Integer>& W) {
  Integer total = 0, pairs = 0;
  for (std::size_t t = 1; t < W.size(); ++t) {
    total += W[t] * t;
    pairs += W[t];
  }
  ClosedFormMetrics m;
  m.k = static_cast<std::uint32_t>(W.size() - 1);
  m.kbar = Rational(total, pairs);
  m.u = 1;
  return m;
}

inline Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Average distance of a dragonfly when every inter-group route is
/// local-global-local through the single link joining the two groups:
/// [(a-1) + h(1 + 2(a-1)) + (G-1-h)(2 + 3(a-1))] / (N - 1) with a = 2h,
/// G = 2h^2 + 1. Under this routing every link class is evenly used, u = 1.
inline Rational dragonfly_lgl_kbar(std::uint64_t h) {
  detail::require(h >= 1, "dragonfly requires h >= 1");
  const Integer a = 2 * h, G = 2 * Integer(h) * h + 1, N = a * G;
  const Integer total = (a - 1) + Integer(h) * (1 + 2 * (a - 1)) + (G - 1 - h) * (2 + 3 * (a - 1));
  return Rational(total, N - 1);
}

/// Closed-form metrics for families whose distance layers are known
/// exactly (and whose links are evenly loaded). Returns nothing for
/// families that need the full computation (MMS, random graphs, Turan with
/// unequal parts).
inline std::optional<ClosedFormMetrics> closed_form_metrics(Family family,
                                                            const TopologyParams& params) {
  validate_params(family, params);
  const std::uint64_t q = params.q.value_or(0);
  const std::uint64_t n = params.n.value_or(0);
  const Integer Q = q;
  switch (family) {
    case Family::complete:
      return detail::from_layers({0, Integer(n - 1)});
    case Family::complete_bipartite:
      return detail::from_layers({0, Integer(n), Integer(n - 1)});
    case Family::turan: {
      const std::uint64_t r = *params.r;
      if (n % r != 0) return std::nullopt;
      return detail::from_layers({0, Integer(n - n / r), Integer(n / r - 1)});
    }
    case Family::paley:
      return detail::from_layers({0, Integer((q - 1) / 2), Integer((q - 1) / 2)});
    case Family::hamming: {
      const std::uint64_t d = params.dim.value_or(2);
      std::vector<Integer> W(d + 1, 0);
      Integer power = 1;
      for (std::uint64_t t = 1; t <= d; ++t) {
        power *= n - 1;
        W[t] = detail::binomial(d, t) * power;
      }
      return detail::from_layers(W);
    }
    case Family::hypercube: {
      std::vector<Integer> W(n + 1, 0);
      for (std::uint64_t t = 1; t <= n; ++t) W[t] = detail::binomial(n, t);
      return detail::from_layers(W);
    }
    case Family::pn:
      return detail::from_layers({0, Q + 1, Q * Q + Q, Q * Q});
    case Family::demi_pn: {
      const Integer N = Q * Q + Q + 1;
      const Integer adjacent = Q * (Q + 1) * (Q + 1);  // ordered adjacent pairs
      ClosedFormMetrics m;
      m.k = 2;
      m.kbar = Rational(adjacent + 2 * (N * (N - 1) - adjacent), N * (N - 1));
      m.u = Rational(2 * Q * Q + Q + 1, 2 * Q * (Q + 1));
      return m;
    }
    case Family::gq_incidence:
      return detail::from_layers({0, Q + 1, Q * (Q + 1), Q * Q * (Q + 1), Q * Q * Q});
    case Family::gh_incidence: {
      std::vector<Integer> W{0};
      Integer power = 1;
      for (int t = 1; t <= 5; ++t, power *= Q) W.push_back((Q + 1) * power);
      W.push_back(power);
      return detail::from_layers(W);
    }
    case Family::delorme_quadrangle:
    case Family::delorme_hexagon: {
      const auto p = expected_params(family, params);
      const std::uint64_t k = family == Family::delorme_quadrangle ? 3 : 5;
      // The approximation needs N > Delta^(k-1); tiny orders have none.
      if (to_double(p.N) <= std::pow(static_cast<double>(q + 1), static_cast<double>(k - 1))) {
        return std::nullopt;
      }
      ClosedFormMetrics m;
      m.k = static_cast<std::uint32_t>(k);
      m.kbar = Rational(gm_avg_distance_approx(static_cast<double>(q + 1), k, to_double(p.N)));
      m.u = 1;
      m.approximate = true;
      return m;
    }
    case Family::oft:
    case Family::mlfm: {
      ClosedFormMetrics m;
      m.k = 2;
      m.kbar = 2;
      m.u = 1;
      m.scope = Scope::leaf;
      return m;
    }
    case Family::dragonfly: {
      ClosedFormMetrics m;
      m.k = 3;
      m.kbar = dragonfly_lgl_kbar(*params.h);
      m.u = 1;
      m.convention = "local-global-local routing";
      return m;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace projnet
