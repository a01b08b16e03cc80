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
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "projnet/design.hpp"
#include "projnet/error.hpp"
#include "projnet/metrics.hpp"
#include "projnet/rational.hpp"
#include "projnet/topology.hpp"

namespace projnet {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class GraphFormat { edgelist, dot, json };

inline GraphFormat parse_graph_format(std::string_view s) {
  if (s == "edgelist") return GraphFormat::edgelist;
  if (s == "dot") return GraphFormat::dot;
  if (s == "json") return GraphFormat::json;
  throw precondition_error("unknown format '" + std::string(s) +
                           "' (expected edgelist, dot or json)");
}

/// "u v" per line, 0-based, u < v, lexicographically sorted.
inline void write_edgelist(const Topology& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Reads "u v" lines; blank lines and '#' comments are skipped. Vertices
/// are 0..max id.
inline Topology read_edgelist(std::istream& in) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint64_t max_id = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(fields >> u)) {
      detail::require(line.find_first_not_of(" \t\r") == std::string::npos,
                      "edge list line " + std::to_string(lineno) + " is malformed");
      continue;
    }
    detail::require(static_cast<bool>(fields >> v) && !(fields >> extra),
                    "edge list line " + std::to_string(lineno) + " must hold two vertex ids");
    detail::require(u >= 0 && v >= 0 && u < (1LL << 32) && v < (1LL << 32),
                    "edge list line " + std::to_string(lineno) + " has an invalid vertex id");
    edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    max_id = std::max<std::uint64_t>(max_id, std::max(u, v));
  }
  detail::require(!edges.empty(), "edge list is empty");
  return topology_from_edges(max_id + 1, edges);
}

/// Graphviz rendering; spines are drawn as boxes, global links dashed.
inline void write_dot(const Topology& g, std::ostream& out) {
  out << "graph \"" << g.name() << "\" {\n";
  out << "  node [shape=circle];\n";
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v) << "\"";
    if (g.role(v) == Role::spine) out << ", shape=box, color=red";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (g.arc_class(g.find_arc(u, v)) == LinkClass::global) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
}

inline Json params_json(const TopologyParams& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p.entries()) j[k] = v;
  return j;
}

inline Json graph_json(const Topology& g) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["family"] = family_name(g.family());
  j["params"] = params_json(g.params());
  j["vertices"] = g.num_vertices();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  Json roles = Json::array(), labels = Json::array();
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    roles.push_back(std::string(role_name(g.role(v))));
    labels.push_back(g.label(v));
  }
  j["roles"] = std::move(roles);
  j["labels"] = std::move(labels);
  if (g.has_link_classes()) {
    Json classes = Json::array();
    for (const auto& [u, v] : g.edges()) {
      classes.push_back(std::string(link_class_name(g.arc_class(g.find_arc(u, v)))));
    }
    j["link_classes"] = std::move(classes);
  }
  return j;
}

inline void write_graph(const Topology& g, GraphFormat format, std::ostream& out) {
  switch (format) {
    case GraphFormat::edgelist:
      write_edgelist(g, out);
      break;
    case GraphFormat::dot:
      write_dot(g, out);
      break;
    case GraphFormat::json:
      out << graph_json(g).dump(2) << '\n';
      break;
  }
}

/// Reads the JSON descriptor written by graph_json. Structure (vertices,
/// edges, roles) is kept; the result is a custom topology.
inline Topology read_graph_json(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw precondition_error(std::string("graph JSON is malformed: ") + e.what());
  }
  try {
    detail::require(j.at("schema").get<int>() == kSchemaVersion, "unsupported graph JSON schema");
    const auto n = j.at("vertices").get<std::uint64_t>();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const auto& e : j.at("edges")) {
      detail::require(e.is_array() && e.size() == 2, "graph JSON edge must be a pair");
      edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    std::vector<Role> roles;
    if (j.contains("roles")) {
      for (const auto& r : j.at("roles")) {
        const auto s = r.get<std::string>();
        detail::require(s == "leaf" || s == "spine", "graph JSON role must be leaf or spine");
        roles.push_back(s == "leaf" ? Role::leaf : Role::spine);
      }
      detail::require(roles.size() == n, "graph JSON roles do not match the vertex count");
    }
    return topology_from_edges(n, edges, roles);
  } catch (const nlohmann::json::exception& e) {
    throw precondition_error(std::string("graph JSON is malformed: ") + e.what());
  }
}

/// Exact value plus a double for convenience.
inline Json rational_json(const Rational& r) {
  Json j;
  j["numerator"] = boost::multiprecision::numerator(r).str();
  j["denominator"] = boost::multiprecision::denominator(r).str();
  j["decimal"] = to_double(r);
  return j;
}

inline Json metrics_json(const Topology& g, const MetricsReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["graph"] = g.name();
  j["scope"] = scope_name(r.scope);
  j["vertices"] = r.vertices;
  j["edges"] = g.num_edges();
  j["diameter"] = r.k;
  j["distance_distribution"] = r.W;
  j["total_distance"] = r.total_distance.str();
  j["kbar"] = rational_json(r.kbar);
  j["u"] = rational_json(r.u);
  j["a"] = rational_json(r.a);
  j["Delta"] = r.Delta;
  j["total_load"] = rational_json(r.total_load);
  j["max_load"] = rational_json(r.max_load);
  j["mean_load"] = rational_json(r.mean_load);
  if (g.has_link_classes()) {
    Json classes = Json::object();
    for (const auto& [c, load] : r.load_by_class) {
      Json k;
      k["arcs"] = r.arcs_by_class.at(c);
      k["total_load"] = rational_json(load);
      classes[std::string(link_class_name(c))] = std::move(k);
    }
    j["load_by_class"] = std::move(classes);
  }
  return j;
}

/// "distance,count" rows of the ordered-pair distance distribution.
inline void write_distance_csv(const DistanceReport& r, std::ostream& out) {
  out << "distance,count\n";
  for (std::size_t t = 1; t < r.W.size(); ++t) out << t << ',' << r.W[t] << '\n';
}

/// "load,arcs" rows; loads are exact fractions.
inline void write_load_histogram_csv(const MetricsReport& r, std::ostream& out) {
  out << "load,arcs\n";
  for (const auto& [load, count] : load_histogram(r)) {
    out << to_fraction_string(load) << ',' << count << '\n';
  }
}

/// Human-readable summary with decimals fixed at 4 places.
inline void write_metrics_text(const Topology& g, const MetricsReport& r, std::ostream& out) {
  out << g.name() << ": N=" << g.num_vertices() << " edges=" << g.num_edges()
      << " scope=" << scope_name(r.scope) << " diameter=" << r.k << '\n';
  out << "kbar = " << to_fraction_string(r.kbar) << " = " << to_decimal_string(r.kbar) << '\n';
  out << "u    = " << to_fraction_string(r.u) << " = " << to_decimal_string(r.u) << '\n';
  out << "a    = " << to_decimal_string(r.a) << " (Delta=" << r.Delta << ")\n";
}

inline Json design_json(const DesignReport& d) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["topology"] = d.name;
  j["family"] = family_name(d.family);
  j["params"] = params_json(d.params);
  j["T"] = d.T;
  j["R"] = d.R;
  j["N"] = d.N;
  j["Delta"] = d.Delta;
  j["Delta0"] = d.Delta0();
  j["leaves"] = d.leaves;
  j["metrics"] = {{"scope", scope_name(d.metrics.scope)},
                  {"source", d.metrics.source},
                  {"convention", d.metrics.convention},
                  {"approximate", d.metrics.approximate},
                  {"kbar", rational_json(d.metrics.kbar)},
                  {"u", rational_json(d.metrics.u)}};
  j["dimensioning"] = {{"rule", d.dimensioning.rule},
                       {"capacity", rational_json(d.dimensioning.capacity)},
                       {"ideal", rational_json(d.dimensioning.ideal)},
                       {"subscription", rational_json(d.dimensioning.subscription)},
                       {"oversubscribed", d.dimensioning.oversubscribed}};
  if (d.layout) {
    j["layout"] = {{"strategy", d.layout->strategy},
                   {"groups", d.layout->num_groups()},
                   {"group_routers", d.layout->group_routers},
                   {"group_terminals", d.layout->group_terminals}};
  }
  j["electrical_cables"] = d.electrical;
  j["optical_cables"] = d.optical;
  j["injected_split"] = d.injected;
  Json config = Json::object();
  for (const auto& [k, v] : d.config.entries()) config[k] = v;
  j["cost_config"] = std::move(config);
  j["cost_per_node"] = d.price.cost_per_node;
  j["power_per_node"] = d.price.power_per_node;
  return j;
}

}  // namespace projnet
