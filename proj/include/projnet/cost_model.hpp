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
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "projnet/error.hpp"

namespace projnet {

/// Prices and power figures of the dollar/watt model. Terminal-to-router
/// links carry no cable cost; they only show up as router ports.
struct CostConfig {
  std::string preset = "10k";
  double link_rate = 40;              // Gbps
  double electrical_cost = 0.985;     // $/Gbps
  double optical_cost = 7.7432;       // $/Gbps
  double router_cost_slope = 350.4;   // $/port
  double router_cost_intercept = -892.3;  // $
  double port_power = 2.8;            // W
  std::uint64_t target_group_size = 500;  // compute nodes per electrical group

  void validate() const {
    detail::require(link_rate > 0, "link_rate must be positive");
    detail::require(electrical_cost > 0, "electrical_cost must be positive");
    detail::require(optical_cost > 0, "optical_cost must be positive");
    detail::require(router_cost_slope > 0, "router_cost_slope must be positive");
    detail::require(port_power > 0, "port_power must be positive");
    detail::require(target_group_size > 0, "target_group_size must be positive");
  }

  double electrical_cable_cost() const { return electrical_cost * link_rate; }
  double optical_cable_cost() const { return optical_cost * link_rate; }
  double router_cost(double radix) const {
    return router_cost_slope * radix + router_cost_intercept;
  }

  std::vector<std::pair<std::string, std::string>> entries() const {
    auto num = [](double v) {
      std::ostringstream out;
      out.precision(10);
      out << v;
      return out.str();
    };
    return {{"preset", preset},
            {"link_rate", num(link_rate)},
            {"electrical_cost", num(electrical_cost)},
            {"optical_cost", num(optical_cost)},
            {"router_cost_slope", num(router_cost_slope)},
            {"router_cost_intercept", num(router_cost_intercept)},
            {"port_power", num(port_power)},
            {"target_group_size", std::to_string(target_group_size)}};
  }
};

/// Named presets: "10k" (also "paper-10k") and "25k" (also "paper-25k")
/// differ only in the optical price.
inline CostConfig cost_preset(const std::string& name) {
  CostConfig c;
  if (name == "10k" || name == "paper-10k") {
    c.preset = "10k";
    c.optical_cost = 7.7432;
  } else if (name == "25k" || name == "paper-25k") {
    c.preset = "25k";
    c.optical_cost = 7.9178;
  } else {
    throw precondition_error("unknown cost preset '" + name + "' (expected 10k or 25k)");
  }
  return c;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == value.size() && !value.empty(),
          "config key '" + key + "' expects a number, got '" + value + "'");
  return v;
}

}  // namespace detail

/// Parses "key = value" lines; '#' starts a comment. A "preset" key, if
/// present, is applied first so later keys override it.
inline CostConfig parse_cost_config(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    detail::require(eq != std::string::npos,
                    "config line " + std::to_string(lineno) + " is not key=value");
    kv.emplace_back(detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
  CostConfig c;
  for (const auto& [k, v] : kv) {
    if (k == "preset") c = cost_preset(v);
  }
  for (const auto& [k, v] : kv) {
    if (k == "preset") continue;
    if (k == "link_rate") c.link_rate = detail::parse_double(k, v);
    else if (k == "electrical_cost") c.electrical_cost = detail::parse_double(k, v);
    else if (k == "optical_cost") c.optical_cost = detail::parse_double(k, v);
    else if (k == "router_cost_slope") c.router_cost_slope = detail::parse_double(k, v);
    else if (k == "router_cost_intercept") c.router_cost_intercept = detail::parse_double(k, v);
    else if (k == "port_power") c.port_power = detail::parse_double(k, v);
    else if (k == "target_group_size") {
      const double t = detail::parse_double(k, v);
      detail::require(t >= 1 && t == static_cast<double>(static_cast<std::uint64_t>(t)),
                      "target_group_size must be a positive integer");
      c.target_group_size = static_cast<std::uint64_t>(t);
    } else {
      throw precondition_error("unknown config key '" + k + "'");
    }
  }
  c.validate();
  return c;
}

inline CostConfig load_cost_config(const std::string& path) {
  std::ifstream in(path);
  detail::require(static_cast<bool>(in), "cannot open config file '" + path + "'");
  return parse_cost_config(in);
}

struct Price {
  double cost_per_node = 0;   // $
  double power_per_node = 0;  // W
};

/// Cable plus router cost, and router port power, per compute node.
inline Price price(std::uint64_t N, double R, double T, std::uint64_t electrical,
                   std::uint64_t optical, const CostConfig& c) {
  detail::require(T > 0, "price requires a positive terminal count");
  c.validate();
  const double cables = static_cast<double>(electrical) * c.electrical_cable_cost() +
                        static_cast<double>(optical) * c.optical_cable_cost();
  const double routers = static_cast<double>(N) * c.router_cost(R);
  return {(cables + routers) / T, c.port_power * static_cast<double>(N) * R / T};
}

/// Figure of merit kbar / u: links traversed per delivered unit of traffic.
inline double cost_measure(double kbar, double u) {
  detail::require(u > 0 && u <= 1, "utilization must lie in (0, 1]");
  return kbar / u;
}

/// c_i + c_t kbar/u + c_r (1 + kbar/u) / R: per-node cost with c_i per
/// terminal interface, c_t per traversed link and c_r per router.
inline double abstract_cost_per_node(double kbar, double u, double R, double c_i, double c_t,
                                     double c_r) {
  detail::require(kbar >= 1, "kbar must be at least 1");
  detail::require(R > 0, "R must be positive");
  const double m = cost_measure(kbar, u);
  return c_i + c_t * m + c_r * (1 + m) / R;
}

}  // namespace projnet
