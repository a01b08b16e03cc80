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
#include <sstream>
#include <string>
#include <vector>

#include "projnet/bounds.hpp"
#include "projnet/closed_forms.hpp"
#include "projnet/cost_model.hpp"
#include "projnet/design.hpp"
#include "projnet/generators.hpp"
#include "projnet/structural_params.hpp"

namespace projnet {

/// One realizable network of a family at radix R.
struct SweepPoint {
  std::string family;
  std::string param;
  std::uint64_t R = 0;
  std::optional<std::uint64_t> N;
  Rational T;
  double kbar = 0;
  double u = 0;
  double kbar_over_u = 0;
  std::optional<double> cost;
  std::optional<double> power;
  bool approximate = false;
};

struct SweepOptions {
  std::uint64_t rmax = 64;
  std::vector<std::string> families;  // empty: default_sweep_families()
  CostConfig config{};
  unsigned threads = 0;
  /// Largest MMS order analyzed exactly; the family has no closed-form u.
  std::uint64_t mms_exact_limit = 64;
};

/// Families with closed-form or cheaply computed metrics. Random regular
/// graphs are left out: their parameters do not follow from R.
inline std::vector<std::string> default_sweep_families() {
  return {"complete", "turan", "complete-bipartite", "paley", "hamming", "hamming3",
          "hypercube", "pn", "demi-pn", "mms", "gq-incidence", "gh-incidence",
          "delorme-quadrangle", "delorme-hexagon", "dragonfly", "oft", "mlfm"};
}

namespace detail {

/// Inter-router links from closed-form structure (all optical in the sweep).
inline Rational sweep_cables(Family f, const StructuralParams& s) {
  if (f == Family::oft || f == Family::mlfm) return s.L * s.Delta;
  if (f == Family::demi_pn) return (s.N * s.Delta - s.Delta) / 2;  // q+1 points have degree q
  return s.N * s.Delta / 2;
}

/// Builds the sweep point for one parameter set, or nullopt when the
/// family has no usable metrics for it.
inline std::optional<SweepPoint> sweep_point(const std::string& label, Family f,
                                             const TopologyParams& p, const SweepOptions& o) {
  const auto s = expected_params(f, p);
  std::optional<DesignMetrics> m = closed_form_design_metrics(f, p);
  if (!m) {
    if (f != Family::mms || *p.q > o.mms_exact_limit) return std::nullopt;
    AnalysisOptions a;
    a.threads = 1;
    m = exact_design_metrics(build(f, p), a);
  }
  const bool indirect = family_info(f).indirect;
  const Rational capacity = indirect ? 2 * s.Delta : s.Delta;
  // Networks too small to carry a single terminal per router are skipped.
  if (kSubscriptionThreshold * capacity * m->u < m->kbar && !structural_terminals(f, p)) {
    return std::nullopt;
  }
  const auto d = dimension(f, p, capacity, m->kbar, m->u);
  SweepPoint pt;
  pt.family = label;
  pt.param = p.to_string();
  pt.R = static_cast<std::uint64_t>((s.Delta + d.Delta0).convert_to<double>());
  pt.T = s.L * Rational(d.Delta0);
  pt.kbar = to_double(m->kbar);
  pt.u = to_double(m->u);
  pt.kbar_over_u = pt.kbar / pt.u;
  pt.approximate = m->approximate;
  if (boost::multiprecision::denominator(s.N) == 1 && s.N < Rational(std::uint64_t{1} << 53)) {
    const auto N = boost::multiprecision::numerator(s.N).convert_to<std::uint64_t>();
    pt.N = N;
    const double T = to_double(pt.T);
    const auto cables = to_double(sweep_cables(f, s));
    pt.cost = (cables * o.config.optical_cable_cost() +
               static_cast<double>(N) * o.config.router_cost(static_cast<double>(pt.R))) /
              T;
    pt.power = o.config.port_power * static_cast<double>(N) * static_cast<double>(pt.R) / T;
  }
  return pt;
}

inline bool prime_power_at_least(std::uint64_t q, std::uint64_t lo) {
  return q >= lo && is_prime_power(q);
}

/// Points of one sweep family in increasing parameter order, stopping once
/// the network degree alone exceeds rmax.
inline std::vector<SweepPoint> sweep_family(const std::string& label, const SweepOptions& o) {
  std::vector<SweepPoint> out;
  const std::uint64_t rmax = o.rmax;
  // Radix grows with the parameter, so the first point past rmax ends the
  // family.
  bool past = false;
  auto add = [&](Family f, const TopologyParams& p) {
    if (past) return;
    const auto pt = sweep_point(label, f, p, o);
    if (!pt) return;
    if (pt->R <= rmax) {
      out.push_back(*pt);
    } else {
      past = true;
    }
  };
  if (label == "complete") {
    for (std::uint64_t n = 2; n <= rmax; ++n) add(Family::complete, {.n = n});
  } else if (label == "turan") {
    for (std::uint64_t r : {3, 4}) {
      past = false;
      for (std::uint64_t n = r; n * (r - 1) / r < rmax; n += r) add(Family::turan, {.n = n, .r = r});
    }
  } else if (label == "complete-bipartite") {
    for (std::uint64_t n = 1; n < rmax; ++n) add(Family::complete_bipartite, {.n = n});
  } else if (label == "paley") {
    for (std::uint64_t q = 5; (q - 1) / 2 < rmax; q += 4) {
      if (is_prime_power(q)) add(Family::paley, {.q = q});
    }
  } else if (label == "hamming" || label == "hamming3") {
    const std::uint64_t dim = label == "hamming" ? 2 : 3;
    for (std::uint64_t n = 2; dim * (n - 1) < rmax; ++n) add(Family::hamming, {.n = n, .dim = dim});
  } else if (label == "hypercube") {
    for (std::uint64_t n = 2; n < rmax && n <= 30; ++n) add(Family::hypercube, {.n = n});
  } else if (label == "dragonfly") {
    for (std::uint64_t h = 1; 3 * h - 1 < rmax; ++h) add(Family::dragonfly, {.h = h});
  } else if (label == "mlfm") {
    for (std::uint64_t n = 3; 2 * (n - 1) <= rmax; ++n) add(Family::mlfm, {.n = n});
  } else {
    const Family f = parse_family(label);
    const auto& info = family_info(f);
    detail::require(info.family != Family::random_regular && info.family != Family::custom,
                    "family " + label + " cannot be swept");
    for (std::uint64_t q = 2; q + 1 < rmax; ++q) {
      if (!is_prime_power(q)) continue;
      if (f == Family::mms && q < 3) continue;
      if (f == Family::delorme_quadrangle || f == Family::delorme_hexagon) {
        const auto pp = prime_power_decomposition(q);
        if (pp->prime != 2 || pp->exponent % 2 == 0) continue;
      }
      add(f, {.q = q});
    }
  }
  return out;
}

}  // namespace detail

/// Realizable (T, kbar/u) and (R, T) points of each family with R <= rmax,
/// plus the terminal bound at R = rmax for k = 2 and 3. Families are
/// evaluated in parallel and emitted in the requested order.
inline std::vector<SweepPoint> scalability_sweep(const SweepOptions& o) {
  detail::require(o.rmax >= 5, "sweep requires rmax >= 5 (got " + std::to_string(o.rmax) + ")");
  o.config.validate();
  const auto families = o.families.empty() ? default_sweep_families() : o.families;
  for (const auto& f : families) {
    if (f != "hamming3") {
      const Family fam = parse_family(f);
      detail::require(fam != Family::random_regular && fam != Family::custom,
                      "family " + f + " cannot be swept");
    }
  }
  std::vector<std::vector<SweepPoint>> per_family(families.size());
  detail::parallel_for(detail::worker_count(o.threads, families.size()), families.size(),
                       [&](unsigned, std::size_t i) {
                         per_family[i] = detail::sweep_family(families[i], o);
                       });
  std::vector<SweepPoint> out;
  for (auto& pts : per_family) out.insert(out.end(), pts.begin(), pts.end());
  for (std::uint64_t k : {2, 3}) {
    for (int step = 1; step < 20; ++step) {
      const double kbar = static_cast<double>(k - 1) + step / 20.0;
      SweepPoint b;
      b.family = "bound";
      b.param = "k=" + std::to_string(k);
      b.R = o.rmax;
      b.T = Rational(terminal_bound(static_cast<double>(o.rmax), k, kbar));
      b.kbar = kbar;
      b.u = 1;
      b.kbar_over_u = kbar;
      b.approximate = true;
      out.push_back(b);
    }
  }
  return out;
}

inline std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::ostringstream out;
  out << "family,param,R,N,T,kbar,u,kbar_over_u,cost,power\n";
  auto num = [](double v, int places) { return to_decimal_string(v, places); };
  for (const auto& p : points) {
    const bool integral = boost::multiprecision::denominator(p.T) == 1;
    out << p.family << ',' << '"' << p.param << '"' << ',' << p.R << ','
        << (p.N ? std::to_string(*p.N) : "") << ','
        << (integral ? boost::multiprecision::numerator(p.T).str()
                                       : num(to_double(p.T), 1))
        << ',' << num(p.kbar, 6) << ',' << num(p.u, 6) << ',' << num(p.kbar_over_u, 6) << ','
        << (p.cost ? num(*p.cost, 2) : "") << ',' << (p.power ? num(*p.power, 2) : "") << '\n';
  }
  return out.str();
}

}  // namespace projnet
