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
#include <string>

#include "projnet/error.hpp"
#include "projnet/finite_field.hpp"
#include "projnet/rational.hpp"
#include "projnet/topology.hpp"

namespace projnet {

namespace detail {

inline std::uint64_t need(const std::optional<std::uint64_t>& value, const char* name,
                          Family family) {
  require(value.has_value(),
          family_name(family) + " requires parameter " + std::string(name));
  return *value;
}

inline void require_prime_power(std::uint64_t q) {
  require(is_prime_power(q), "q must be a prime power (got " + std::to_string(q) + ")");
}

inline int mms_epsilon(std::uint64_t q) {
  switch (q % 4) {
    case 1:
      return 1;
    case 3:
      return -1;
    default:
      return 0;
  }
}

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
  return Rational(num, den);
}

inline StructuralParams direct_params(Rational T, Rational R, Rational N, Rational Delta,
                                      Rational Delta0) {
  StructuralParams p{std::move(T), std::move(R), N, Delta, std::move(Delta0), Delta, N, false};
  return p;
}

}  // namespace detail

/// Validates family-specific parameters; throws precondition_error naming
/// the violated requirement.
inline void validate_params(Family family, const TopologyParams& params) {
  using detail::need;
  using detail::require;
  switch (family) {
    case Family::pn:
    case Family::demi_pn:
    case Family::oft:
    case Family::gq_incidence:
    case Family::gh_incidence:
      detail::require_prime_power(need(params.q, "q", family));
      break;
    case Family::mms: {
      const auto q = need(params.q, "q", family);
      detail::require_prime_power(q);
      require(q >= 3, "mms requires q >= 3");
      break;
    }
    case Family::delorme_quadrangle:
    case Family::delorme_hexagon: {
      const auto q = need(params.q, "q", family);
      const auto pp = prime_power_decomposition(q);
      require(pp && pp->prime == 2 && pp->exponent % 2 == 1,
              family_name(family) + " requires q to be an odd power of 2");
      break;
    }
    case Family::paley: {
      const auto q = need(params.q, "q", family);
      detail::require_prime_power(q);
      require(q % 4 == 1, "paley requires q = 1 (mod 4)");
      break;
    }
    case Family::mlfm:
    case Family::complete:
      require(need(params.n, "n", family) >= 2, family_name(family) + " requires n >= 2");
      break;
    case Family::complete_bipartite:
      require(need(params.n, "n", family) >= 1, "complete-bipartite requires n >= 1");
      break;
    case Family::turan: {
      const auto n = need(params.n, "n", family);
      const auto r = need(params.r, "r", family);
      require(r >= 2 && r <= n, "turan requires 2 <= r <= n");
      break;
    }
    case Family::hamming: {
      require(need(params.n, "n", family) >= 2, "hamming requires n >= 2");
      const auto d = params.dim.value_or(2);
      require(d >= 1, "hamming requires dim >= 1");
      break;
    }
    case Family::hypercube: {
      const auto n = need(params.n, "n", family);
      require(n >= 1 && n <= 30, "hypercube requires 1 <= n <= 30");
      break;
    }
    case Family::dragonfly:
      require(need(params.h, "h", family) >= 1, "dragonfly requires h >= 1");
      break;
    case Family::random_regular: {
      const auto n = need(params.n, "n", family);
      const auto d = need(params.degree, "degree", family);
      require(d >= 1 && d < n, "random-regular requires 1 <= degree < n");
      require((n * d) % 2 == 0, "random-regular requires n * degree to be even");
      need(params.seed, "seed", family);
      break;
    }
    case Family::custom:
      require(false, "custom graphs have no closed-form parameters");
  }
}

/// Closed-form (T, R, N, Delta, Delta0) of a family, evaluated exactly. For
/// direct families Delta0 is the balanced value Delta * u / kbar in the
/// large-network limit, so it need not be an integer. Indirect families use
/// their structural Delta0.
inline StructuralParams expected_params(Family family, const TopologyParams& params) {
  using detail::direct_params;
  using detail::rat;
  validate_params(family, params);
  const auto q = static_cast<std::int64_t>(params.q.value_or(0));
  const auto n = static_cast<std::int64_t>(params.n.value_or(0));
  switch (family) {
    case Family::complete:
      return direct_params(rat(n * n), rat(2 * n - 1), rat(n), rat(n - 1), rat(n));
    case Family::turan: {
      const auto r = static_cast<std::int64_t>(*params.r);
      return direct_params(rat(n * n * (r - 1), r + 1), rat(n * (r - 1) * (2 * r + 1), r * (r + 1)),
                           rat(n), rat(n * (r - 1), r), rat(n * (r - 1), r + 1));
    }
    case Family::complete_bipartite:
      return direct_params(rat(4 * n * n, 3), rat(5 * n, 3), rat(2 * n), rat(n), rat(2 * n, 3));
    case Family::paley:
      // Same shape as the complete bipartite row: kbar -> 3/2, u = 1.
      return direct_params(rat(q * (q - 1), 3), rat(5 * (q - 1), 6), rat(q), rat(q - 1, 2),
                           rat(q - 1, 3));
    case Family::hamming: {
      const auto d = static_cast<std::int64_t>(params.dim.value_or(2));
      Integer nd = 1;
      for (std::int64_t i = 0; i < d; ++i) nd *= n;
      return direct_params(Rational(nd * n), rat((d + 1) * n - d), Rational(nd), rat(d * (n - 1)),
                           rat(n));
    }
    case Family::demi_pn:
      return direct_params(rat(q * q * q + 2 * q * q + 2 * q + 1, 2), rat(3 * (q + 1), 2),
                           rat(q * q + q + 1), rat(q + 1), rat(q + 1, 2));
    case Family::mms: {
      const std::int64_t t = 3 * q - detail::mms_epsilon(q);
      return direct_params(rat(4 * q * q * t, 9), rat(13 * t, 18), rat(2 * q * q), rat(t, 2),
                           rat(2 * t, 9));
    }
    case Family::pn:
      return direct_params(rat(4 * (q * q * q + 2 * q * q + 2 * q + 1), 5), rat(7 * (q + 1), 5),
                           rat(2 * (q * q + q + 1)), rat(q + 1), rat(2 * (q + 1), 5));
    case Family::dragonfly: {
      const auto h = static_cast<std::int64_t>(*params.h);
      return direct_params(rat(4 * h * h * h * h + 2 * h * h), rat(4 * h - 1),
                           rat(4 * h * h * h + 2 * h), rat(3 * h - 1), rat(h));
    }
    case Family::delorme_quadrangle: {
      const Integer qq = q;
      const Integer s = (qq + 1) * (qq + 1) * (qq * qq + 1);
      return direct_params(Rational(s, 3), rat(4 * (q + 1), 3), Rational(qq * qq * qq + qq * qq + qq + 1),
                           rat(q + 1), rat(q + 1, 3));
    }
    case Family::gq_incidence: {
      const Integer qq = q;
      const Integer s = (qq + 1) * (qq + 1) * (qq * qq + 1);
      return direct_params(Rational(4 * s, 7), rat(9 * (q + 1), 7),
                           Rational(2 * (qq * qq * qq + qq * qq + qq + 1)), rat(q + 1),
                           rat(2 * (q + 1), 7));
    }
    case Family::delorme_hexagon:
    case Family::gh_incidence: {
      const Integer qq = q;
      const Integer s = (qq * qq * qq * qq + qq * qq + 1) * (qq + 1) * (qq + 1);
      Integer nn = 0, power = 1;
      for (int i = 0; i <= 5; ++i, power *= qq) nn += power;
      if (family == Family::delorme_hexagon) {
        return direct_params(Rational(s, 5), rat(6 * (q + 1), 5), Rational(nn), rat(q + 1),
                             rat(q + 1, 5));
      }
      return direct_params(Rational(4 * s, 11), rat(13 * (q + 1), 11), Rational(2 * nn),
                           rat(q + 1), rat(2 * (q + 1), 11));
    }
    case Family::random_regular: {
      const double N = static_cast<double>(n);
      const double D = static_cast<double>(*params.degree);
      const double ratio = std::log(D) / std::log(N);
      auto p = direct_params(Rational(D * ratio * N), Rational(D * (1 + ratio)), rat(n),
                             rat(static_cast<std::int64_t>(*params.degree)),
                             Rational(D * ratio));
      p.approximate = true;
      return p;
    }
    case Family::hypercube:
      return direct_params(Rational(Integer(1) << (n + 1)), rat(n + 2), Rational(Integer(1) << n),
                           rat(n), rat(2));
    case Family::oft: {
      const std::int64_t points = q * q + q + 1;
      return {rat(2 * (q + 1) * points), rat(2 * (q + 1)), rat(3 * points), rat(q + 1),
              rat(q + 1), rat(0), rat(2 * points), false};
    }
    case Family::mlfm:
      return {rat(n * (n - 1) * (n - 1)), rat(2 * (n - 1)), rat(3 * n * (n - 1), 2), rat(n - 1),
              rat(n - 1), rat(0), rat(n * (n - 1)), false};
    case Family::custom:
      break;
  }
  detail::ensure(false, "unhandled family");
  return {};
}

}  // namespace projnet
