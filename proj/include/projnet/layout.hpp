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

#include <algorithm>
#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "projnet/cost_model.hpp"
#include "projnet/error.hpp"
#include "projnet/finite_field.hpp"
#include "projnet/projective_plane.hpp"
#include "projnet/topology.hpp"

namespace projnet {

/// `automatic` uses the natural layout where the family has one and the
/// greedy search otherwise.
enum class LayoutStrategy { automatic, natural, greedy };

inline LayoutStrategy parse_layout_strategy(std::string_view s) {
  if (s == "auto") return LayoutStrategy::automatic;
  if (s == "natural") return LayoutStrategy::natural;
  if (s == "greedy") return LayoutStrategy::greedy;
  throw precondition_error("unknown layout strategy '" + std::string(s) +
                           "' (expected auto, natural or greedy)");
}

/// Assignment of routers to electrical groups. Links inside a group are
/// electrical, all others optical.
struct Layout {
  std::string strategy;
  std::vector<std::uint32_t> group_of;
  std::vector<std::size_t> group_routers;
  std::vector<std::uint64_t> group_terminals;
  std::uint64_t electrical = 0;
  std::uint64_t optical = 0;

  std::size_t num_groups() const { return group_routers.size(); }
  /// Most common terminal count among groups.
  std::uint64_t typical_group_terminals() const {
    std::map<std::uint64_t, std::size_t> freq;
    for (const auto t : group_terminals) ++freq[t];
    std::uint64_t best = 0;
    std::size_t count = 0;
    for (const auto& [t, c] : freq) {
      if (c > count || (c == count && t > best)) {
        best = t;
        count = c;
      }
    }
    return best;
  }
};

/// Counts cables by class for a given grouping.
inline Layout classify_links(const Topology& g, std::vector<std::uint32_t> group_of,
                             std::uint64_t Delta0, std::string strategy) {
  detail::require(group_of.size() == g.num_vertices(), "group assignment has the wrong size");
  Layout l;
  l.strategy = std::move(strategy);
  const std::uint32_t groups =
      group_of.empty() ? 0 : *std::max_element(group_of.begin(), group_of.end()) + 1;
  l.group_routers.assign(groups, 0);
  l.group_terminals.assign(groups, 0);
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    ++l.group_routers[group_of[v]];
    if (g.role(v) == Role::leaf) l.group_terminals[group_of[v]] += Delta0;
  }
  for (const auto& [u, v] : g.edges()) {
    (group_of[u] == group_of[v] ? l.electrical : l.optical) += 1;
  }
  detail::ensure(l.electrical + l.optical == g.num_edges(), "layout lost cables");
  l.group_of = std::move(group_of);
  return l;
}

namespace detail {

inline std::uint64_t routers_per_group(std::uint64_t Delta0, const CostConfig& c) {
  require(Delta0 >= 1, "layout requires at least one terminal per router");
  require(c.target_group_size >= Delta0,
          "target group size " + std::to_string(c.target_group_size) +
              " is smaller than one router's " + std::to_string(Delta0) + " terminals");
  return c.target_group_size / Delta0;
}

inline std::uint64_t rounded_ratio(double x) {
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(x)));
}

/// Splits [0, n) into `parts` consecutive runs whose sizes differ by at most
/// one, larger runs first.
inline std::vector<std::uint32_t> balanced_runs(std::size_t n, std::size_t parts) {
  std::vector<std::uint32_t> run_of(n);
  std::size_t v = 0;
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t size = n / parts + (p < n % parts ? 1 : 0);
    for (std::size_t i = 0; i < size; ++i) run_of[v++] = static_cast<std::uint32_t>(p);
  }
  return run_of;
}

}  // namespace detail

/// Every router alone: all cables optical.
inline Layout all_optical_layout(const Topology& g, std::uint64_t Delta0) {
  std::vector<std::uint32_t> group_of(g.num_vertices());
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) group_of[v] = v;
  return classify_links(g, std::move(group_of), Delta0, "all-optical");
}

/// Grouping that follows the family's own structure:
/// Hamming rows (split or merged to the target size), whole dragonfly
/// groups, MMS columns paired as (0,x),(1,x), subplanes of P2(F_q) for
/// square q, consecutive id blocks for families without such structure,
/// and all-optical for indirect networks.
inline Layout natural_layout(const Topology& g, std::uint64_t Delta0, const CostConfig& c) {
  const auto& p = g.params();
  const std::size_t N = g.num_vertices();
  std::vector<std::uint32_t> group_of(N);
  switch (g.family()) {
    case Family::oft:
    case Family::mlfm:
      return all_optical_layout(g, Delta0);
    case Family::hamming: {
      const std::uint64_t m = detail::routers_per_group(Delta0, c);
      const std::uint64_t n = *p.n;
      if (m >= n) {
        const std::uint64_t merge = m / n;
        for (std::uint32_t v = 0; v < N; ++v) group_of[v] = static_cast<std::uint32_t>((v / n) / merge);
        return classify_links(g, std::move(group_of), Delta0, "natural:hamming-rows");
      }
      const std::uint64_t parts = (n + m - 1) / m;
      const auto run_of = detail::balanced_runs(n, parts);
      for (std::uint32_t v = 0; v < N; ++v) {
        group_of[v] = static_cast<std::uint32_t>((v / n) * parts + run_of[v % n]);
      }
      return classify_links(g, std::move(group_of), Delta0, "natural:hamming-row-parts");
    }
    case Family::dragonfly: {
      detail::routers_per_group(Delta0, c);
      const std::uint64_t a = 2 * *p.h;
      const std::uint64_t merge = detail::rounded_ratio(
          static_cast<double>(c.target_group_size) / static_cast<double>(a * Delta0));
      for (std::uint32_t v = 0; v < N; ++v) group_of[v] = static_cast<std::uint32_t>((v / a) / merge);
      return classify_links(g, std::move(group_of), Delta0, "natural:dragonfly-groups");
    }
    case Family::mms: {
      detail::routers_per_group(Delta0, c);
      const std::uint64_t q = *p.q;
      const std::uint64_t merge = detail::rounded_ratio(
          static_cast<double>(c.target_group_size) / static_cast<double>(q * Delta0));
      for (std::uint32_t v = 0; v < N; ++v) {
        const std::uint64_t s = v / (q * q), x = (v / q) % q;
        group_of[v] = static_cast<std::uint32_t>((2 * x + s) / merge);
      }
      return classify_links(g, std::move(group_of), Delta0, "natural:mms-columns");
    }
    case Family::pn:
    case Family::demi_pn: {
      detail::routers_per_group(Delta0, c);
      const auto f = GaloisField::of_order(*p.q);
      detail::require(f.degree() % 2 == 0,
                      "natural layout of " + g.name() +
                          " needs q to be a square (subplane partition); use greedy");
      const auto parts = subplane_partition(f);
      const std::size_t points = plane_size(*p.q);
      const bool incidence = g.family() == Family::pn;
      const std::size_t part_routers = parts.front().size() * (incidence ? 2 : 1);
      const std::uint64_t merge = detail::rounded_ratio(
          static_cast<double>(c.target_group_size) / static_cast<double>(part_routers * Delta0));
      std::vector<char> placed(N, 0);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto group = static_cast<std::uint32_t>(i / merge);
        for (const auto& x : parts[i]) {
          group_of[point_index(x)] = group;
          placed[point_index(x)] = 1;
        }
        if (incidence) {
          for (const auto& line : spanned_lines(parts[i])) {
            group_of[points + point_index(line)] = group;
            placed[points + point_index(line)] = 1;
          }
        }
      }
      detail::ensure(std::all_of(placed.begin(), placed.end(), [](char x) { return x != 0; }),
                     "subplane layout left routers unassigned");
      return classify_links(g, std::move(group_of), Delta0, "natural:subplanes");
    }
    default: {
      const std::uint64_t m = detail::routers_per_group(Delta0, c);
      const std::size_t parts = (N + m - 1) / m;
      return classify_links(g, detail::balanced_runs(N, parts), Delta0, "natural:id-blocks");
    }
  }
}

/// Seeded local search: a random balanced assignment into `groups` groups,
/// then pairwise swaps that increase the number of internal links until no
/// swap helps. Group sizes never change.
inline Layout greedy_layout(const Topology& g, std::uint64_t Delta0, const CostConfig& c,
                            std::uint64_t seed, std::optional<std::size_t> groups = std::nullopt) {
  const std::size_t N = g.num_vertices();
  const std::uint64_t m = detail::routers_per_group(Delta0, c);
  const std::size_t G = groups.value_or((N + m - 1) / m);
  detail::require(G >= 1 && G <= N, "group count must lie in [1, N]");
  std::vector<std::uint32_t> order(N);
  for (std::uint32_t v = 0; v < N; ++v) order[v] = v;
  boost::random::mt19937_64 rng(seed);
  for (std::size_t i = N; i > 1; --i) {
    boost::random::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(order[i - 1], order[pick(rng)]);
  }
  const auto run_of = detail::balanced_runs(N, G);
  std::vector<std::uint32_t> group_of(N);
  for (std::size_t i = 0; i < N; ++i) group_of[order[i]] = run_of[i];

  // cnt[v * G + x]: neighbours of v inside group x.
  std::vector<std::int32_t> cnt(N * G, 0);
  for (std::uint32_t v = 0; v < N; ++v) {
    for (const auto w : g.neighbors(v)) ++cnt[v * G + group_of[w]];
  }
  constexpr int kMaxRounds = 200;
  for (int round = 0; round < kMaxRounds; ++round) {
    bool improved = false;
    for (std::uint32_t u = 0; u < N; ++u) {
      for (std::uint32_t v = u + 1; v < N; ++v) {
        const auto a = group_of[u], b = group_of[v];
        if (a == b) continue;
        const std::int64_t gain = cnt[u * G + b] - cnt[u * G + a] + cnt[v * G + a] -
                                  cnt[v * G + b] - (g.adjacent(u, v) ? 2 : 0);
        if (gain <= 0) continue;
        for (const auto w : g.neighbors(u)) {
          --cnt[w * G + a];
          ++cnt[w * G + b];
        }
        for (const auto w : g.neighbors(v)) {
          --cnt[w * G + b];
          ++cnt[w * G + a];
        }
        group_of[u] = b;
        group_of[v] = a;
        improved = true;
      }
    }
    if (!improved) break;
  }
  return classify_links(g, std::move(group_of), Delta0, "greedy");
}

/// False only for projective families over a non-square field, which lack
/// a subplane partition.
inline bool has_natural_layout(const Topology& g) {
  if (g.family() != Family::pn && g.family() != Family::demi_pn) return true;
  return GaloisField::of_order(*g.params().q).degree() % 2 == 0;
}

inline Layout make_layout(const Topology& g, std::uint64_t Delta0, const CostConfig& c,
                          LayoutStrategy strategy, std::uint64_t seed = 1,
                          std::optional<std::size_t> groups = std::nullopt) {
  if (g.has_spines()) return all_optical_layout(g, Delta0);
  if (strategy == LayoutStrategy::automatic) {
    strategy = has_natural_layout(g) ? LayoutStrategy::natural : LayoutStrategy::greedy;
  }
  return strategy == LayoutStrategy::natural ? natural_layout(g, Delta0, c)
                                             : greedy_layout(g, Delta0, c, seed, groups);
}

}  // namespace projnet
