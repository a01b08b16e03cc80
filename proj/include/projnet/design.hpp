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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "projnet/closed_forms.hpp"
#include "projnet/cost_model.hpp"
#include "projnet/error.hpp"
#include "projnet/layout.hpp"
#include "projnet/metrics.hpp"
#include "projnet/rational.hpp"
#include "projnet/topology.hpp"

namespace projnet {

/// `structural` applies the family's own terminal convention where it has
/// one (dragonfly h, Hamming n, MLFM n-1, OFT q+1, complete graph n) and
/// falls back to the saturation rule otherwise; `saturation` always uses the
/// rule.
enum class DimensionPolicy { structural, saturation };

inline DimensionPolicy parse_dimension_policy(std::string_view s) {
  if (s == "structural") return DimensionPolicy::structural;
  if (s == "saturation") return DimensionPolicy::saturation;
  throw precondition_error("unknown dimension policy '" + std::string(s) + "'");
}

/// Loosest accepted subscription Delta0 kbar / (C u).
inline const Rational kSubscriptionThreshold{201, 200};

struct Dimensioning {
  std::uint64_t Delta0 = 0;
  Rational capacity;      // C: Delta for direct networks, arcs per leaf for indirect ones
  Rational ideal;         // C u / kbar
  Rational subscription;  // Delta0 kbar / (C u)
  bool oversubscribed = false;
  std::string rule;       // "saturation", "structural" or "override"
};

/// Family-specific terminal count, if the family has one.
inline std::optional<std::uint64_t> structural_terminals(Family family,
                                                         const TopologyParams& p) {
  switch (family) {
    case Family::dragonfly:
      return p.h;
    case Family::hamming:
    case Family::complete:
      return p.n;
    case Family::mlfm:
      return p.n ? std::optional<std::uint64_t>(*p.n - 1) : std::nullopt;
    case Family::oft:
      return p.q ? std::optional<std::uint64_t>(*p.q + 1) : std::nullopt;
    default:
      return std::nullopt;
  }
}

/// Terminals per leaf router: the largest Delta0 whose subscription stays
/// within kSubscriptionThreshold, unless the policy or an explicit override
/// says otherwise.
inline Dimensioning dimension(Family family, const TopologyParams& params,
                              const Rational& capacity, const Rational& kbar, const Rational& u,
                              DimensionPolicy policy = DimensionPolicy::structural,
                              std::optional<std::uint64_t> override_Delta0 = std::nullopt) {
  detail::require(capacity > 0, "capacity must be positive");
  detail::require(kbar > 0, "kbar must be positive");
  detail::require(u > 0 && u <= 1, "utilization must lie in (0, 1]");
  Dimensioning d;
  d.capacity = capacity;
  d.ideal = capacity * u / kbar;
  const auto structural = structural_terminals(family, params);
  if (override_Delta0) {
    detail::require(*override_Delta0 >= 1, "Delta0 override must be at least 1");
    d.Delta0 = *override_Delta0;
    d.rule = "override";
  } else if (policy == DimensionPolicy::structural && structural) {
    d.Delta0 = *structural;
    d.rule = "structural";
  } else {
    const Rational limit = kSubscriptionThreshold * d.ideal;
    const Integer fl = boost::multiprecision::numerator(limit) /
                       boost::multiprecision::denominator(limit);
    detail::require(fl >= 1, "no terminal count of at least 1 avoids oversubscription "
                             "(ideal " + to_decimal_string(d.ideal) + ")");
    d.Delta0 = fl.convert_to<std::uint64_t>();
    d.rule = "saturation";
  }
  d.subscription = Rational(d.Delta0) * kbar / (capacity * u);
  d.oversubscribed = d.subscription > kSubscriptionThreshold;
  return d;
}

enum class MetricsSource { automatic, exact, closed_form };

inline MetricsSource parse_metrics_source(std::string_view s) {
  if (s == "auto") return MetricsSource::automatic;
  if (s == "exact") return MetricsSource::exact;
  if (s == "closed-form") return MetricsSource::closed_form;
  throw precondition_error("unknown metrics source '" + std::string(s) + "'");
}

/// kbar and u feeding the design, with where they came from.
struct DesignMetrics {
  Scope scope = Scope::all;
  Rational kbar;
  Rational u;
  std::string source;      // "exact" or "closed-form"
  std::string convention;  // routing convention behind a closed form, if any
  bool approximate = false;
};

inline std::optional<DesignMetrics> closed_form_design_metrics(Family family,
                                                               const TopologyParams& params) {
  const auto cf = closed_form_metrics(family, params);
  if (!cf) return std::nullopt;
  return DesignMetrics{cf->scope, cf->kbar, cf->u, "closed-form", cf->convention, cf->approximate};
}

inline DesignMetrics exact_design_metrics(const Topology& g, const AnalysisOptions& opts = {}) {
  const Scope scope = g.has_spines() ? Scope::leaf : Scope::all;
  const auto r = analyze(g, scope, opts);
  return {scope, r.kbar, r.u, "exact", "", false};
}

/// Automatic selection prefers an exact closed form and otherwise analyzes
/// the graph. The dragonfly closed form follows local-global-local routing.
inline DesignMetrics design_metrics(const Topology& g, MetricsSource source,
                                    const AnalysisOptions& opts = {}) {
  if (source != MetricsSource::exact) {
    auto cf = closed_form_design_metrics(g.family(), g.params());
    if (cf && (!cf->approximate || source == MetricsSource::closed_form)) return *cf;
    detail::require(source != MetricsSource::closed_form,
                    "no closed-form metrics for " + g.name());
  }
  return exact_design_metrics(g, opts);
}

struct DesignOptions {
  MetricsSource source = MetricsSource::automatic;
  DimensionPolicy policy = DimensionPolicy::structural;
  std::optional<std::uint64_t> Delta0{};
  LayoutStrategy strategy = LayoutStrategy::automatic;
  std::uint64_t seed = 1;
  std::optional<std::size_t> groups{};
  CostConfig config{};
  AnalysisOptions analysis{};
  /// Printed (electrical, optical) cable counts to price instead of a
  /// computed layout.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> injected_split{};
};

struct DesignReport {
  std::string name;
  Family family = Family::custom;
  TopologyParams params;
  std::uint64_t T = 0;
  std::uint64_t R = 0;
  std::uint64_t N = 0;
  std::uint64_t Delta = 0;
  std::uint64_t leaves = 0;
  std::uint64_t edges = 0;
  DesignMetrics metrics;
  Dimensioning dimensioning;
  std::optional<Layout> layout;
  std::uint64_t electrical = 0;
  std::uint64_t optical = 0;
  bool injected = false;
  CostConfig config;
  Price price;

  std::uint64_t Delta0() const { return dimensioning.Delta0; }
  const Rational& subscription() const { return dimensioning.subscription; }
};

/// Router capacity C used by the saturation rule: Delta for direct
/// networks, network arcs per leaf for indirect ones.
inline Rational terminal_capacity(const Topology& g) {
  if (!g.has_spines()) return Rational(g.max_degree());
  return Rational(g.num_arcs(), g.leaves().size());
}

/// Dimension, lay out and price a constructed topology.
inline DesignReport design(const Topology& g, const DesignOptions& o = {}) {
  o.config.validate();
  DesignReport r;
  r.name = g.name();
  r.family = g.family();
  r.params = g.params();
  r.N = g.num_vertices();
  r.Delta = g.max_degree();
  r.edges = g.num_edges();
  r.leaves = g.leaves().size();
  r.metrics = design_metrics(g, o.source, o.analysis);
  r.dimensioning =
      dimension(g.family(), g.params(), terminal_capacity(g), r.metrics.kbar, r.metrics.u,
                o.policy, o.Delta0);
  r.T = r.leaves * r.Delta0();
  for (std::uint32_t v = 0; v < r.N; ++v) {
    r.R = std::max<std::uint64_t>(r.R, g.degree(v) + (g.role(v) == Role::leaf ? r.Delta0() : 0));
  }
  r.config = o.config;
  if (o.injected_split) {
    r.electrical = o.injected_split->first;
    r.optical = o.injected_split->second;
    r.injected = true;
  } else {
    r.layout = make_layout(g, r.Delta0(), o.config, o.strategy, o.seed, o.groups);
    r.electrical = r.layout->electrical;
    r.optical = r.layout->optical;
    detail::ensure(r.electrical + r.optical == r.edges, "layout does not conserve cables");
  }
  r.price = price(r.N, static_cast<double>(r.R), static_cast<double>(r.T), r.electrical,
                  r.optical, o.config);
  return r;
}

}  // namespace projnet
