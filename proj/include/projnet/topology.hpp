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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projnet/error.hpp"
#include "projnet/rational.hpp"

namespace projnet {

enum class Family {
  pn,
  demi_pn,
  mms,
  oft,
  mlfm,
  complete,
  complete_bipartite,
  turan,
  paley,
  hamming,
  hypercube,
  dragonfly,
  random_regular,
  gq_incidence,
  gh_incidence,
  delorme_quadrangle,
  delorme_hexagon,
  custom,
};

struct FamilyInfo {
  Family family;
  std::string_view name;
  bool constructible;  // false: only closed-form parameters are available
  bool indirect;       // has spine routers without terminals
};

inline const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {Family::pn, "pn", true, false},
      {Family::demi_pn, "demi-pn", true, false},
      {Family::mms, "mms", true, false},
      {Family::oft, "oft", true, true},
      {Family::mlfm, "mlfm", true, true},
      {Family::complete, "complete", true, false},
      {Family::complete_bipartite, "complete-bipartite", true, false},
      {Family::turan, "turan", true, false},
      {Family::paley, "paley", true, false},
      {Family::hamming, "hamming", true, false},
      {Family::hypercube, "hypercube", true, false},
      {Family::dragonfly, "dragonfly", true, false},
      {Family::random_regular, "random-regular", true, false},
      {Family::gq_incidence, "gq-incidence", false, false},
      {Family::gh_incidence, "gh-incidence", false, false},
      {Family::delorme_quadrangle, "delorme-quadrangle", false, false},
      {Family::delorme_hexagon, "delorme-hexagon", false, false},
      {Family::custom, "custom", false, false},
  };
  return table;
}

inline const FamilyInfo& family_info(Family family) {
  for (const auto& info : family_table()) {
    if (info.family == family) return info;
  }
  detail::ensure(false, "unregistered family");
  return family_table().front();
}

inline std::string family_name(Family family) {
  return std::string(family_info(family).name);
}

/// Accepts the canonical names plus a few common aliases.
inline Family parse_family(std::string_view name) {
  static const std::map<std::string_view, Family> aliases = {
      {"slimfly", Family::mms},      {"slim-fly", Family::mms},
      {"demipn", Family::demi_pn},   {"brown", Family::demi_pn},
      {"kn", Family::complete},      {"knn", Family::complete_bipartite},
      {"random", Family::random_regular}};
  for (const auto& info : family_table()) {
    if (info.name == name) return info.family;
  }
  if (const auto it = aliases.find(name); it != aliases.end()) return it->second;
  throw precondition_error("unknown family '" + std::string(name) + "'");
}

enum class Role : std::uint8_t { leaf, spine };
enum class LinkClass : std::uint8_t { none, local, global };

inline std::string_view role_name(Role role) {
  return role == Role::leaf ? "leaf" : "spine";
}
inline std::string_view link_class_name(LinkClass c) {
  switch (c) {
    case LinkClass::local:
      return "local";
    case LinkClass::global:
      return "global";
    default:
      return "none";
  }
}

/// Construction parameters; which ones apply depends on the family.
struct TopologyParams {
  std::optional<std::uint64_t> q{};
  std::optional<std::uint64_t> n{};
  std::optional<std::uint64_t> r{};
  std::optional<std::uint64_t> h{};
  std::optional<std::uint64_t> dim{};
  std::optional<std::uint64_t> degree{};
  std::optional<std::uint64_t> seed{};

  /// Set parameters as (name, value), in a fixed order.
  std::vector<std::pair<std::string, std::uint64_t>> entries() const {
    std::vector<std::pair<std::string, std::uint64_t>> out;
    auto add = [&](const char* name, const std::optional<std::uint64_t>& v) {
      if (v) out.emplace_back(name, *v);
    };
    add("q", q);
    add("n", n);
    add("r", r);
    add("h", h);
    add("dim", dim);
    add("degree", degree);
    add("seed", seed);
    return out;
  }

  /// Compact display such as "q=23" or "n=22,dim=2".
  std::string to_string() const {
    std::string out;
    for (const auto& [k, v] : entries()) {
      if (!out.empty()) out += ",";
      out += k + "=" + std::to_string(v);
    }
    return out;
  }

  friend bool operator==(const TopologyParams&, const TopologyParams&) = default;
};

/// Closed-form network parameters: terminals T, radix R, routers N, network
/// degree Delta, terminals per leaf Delta0, leaf-to-leaf degree delta and
/// leaf count L. Exact rationals except where `approximate` is set.
struct StructuralParams {
  Rational T;
  Rational R;
  Rational N;
  Rational Delta;
  Rational Delta0;
  Rational delta;
  Rational L;
  bool approximate = false;
};

class TopologyBuilder;

/// Simple undirected graph with sorted adjacency in CSR form. Directed arcs
/// are numbered by CSR position: arc offset(u) + i runs from u to its i-th
/// neighbor.
class Topology {
 public:
  Family family() const { return family_; }
  const TopologyParams& params() const { return params_; }
  std::string name() const {
    const auto p = params_.to_string();
    return family_name(family_) + (p.empty() ? "" : "(" + p + ")");
  }

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_arcs() const { return targets_.size(); }
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(std::uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t arc_offset(std::uint32_t v) const { return offsets_[v]; }
  std::uint32_t arc_target(std::size_t arc) const { return targets_[arc]; }
  std::uint32_t arc_source(std::size_t arc) const {
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), arc);
    return static_cast<std::uint32_t>(it - offsets_.begin() - 1);
  }
  std::size_t reverse_arc(std::size_t arc) const { return reverse_[arc]; }
  /// Arc index of u -> v, or num_arcs() when not adjacent.
  std::size_t find_arc(std::uint32_t u, std::uint32_t v) const {
    const auto nb = neighbors(u);
    const auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return num_arcs();
    return offsets_[u] + static_cast<std::size_t>(it - nb.begin());
  }
  bool adjacent(std::uint32_t u, std::uint32_t v) const {
    return find_arc(u, v) != num_arcs();
  }

  LinkClass arc_class(std::size_t arc) const {
    return classes_.empty() ? LinkClass::none : classes_[arc];
  }
  bool has_link_classes() const { return !classes_.empty(); }

  Role role(std::uint32_t v) const { return roles_[v]; }
  bool has_spines() const {
    return std::find(roles_.begin(), roles_.end(), Role::spine) != roles_.end();
  }
  std::vector<std::uint32_t> leaves() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < num_vertices(); ++v) {
      if (roles_[v] == Role::leaf) out.push_back(v);
    }
    return out;
  }

  std::string label(std::uint32_t v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  std::size_t min_degree() const {
    std::size_t d = num_vertices() ? degree(0) : 0;
    for (std::uint32_t v = 0; v < num_vertices(); ++v) d = std::min(d, degree(v));
    return d;
  }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (std::uint32_t v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
    return d;
  }
  bool is_regular() const { return min_degree() == max_degree(); }

  /// degree -> number of vertices.
  std::map<std::size_t, std::size_t> degree_histogram() const {
    std::map<std::size_t, std::size_t> h;
    for (std::uint32_t v = 0; v < num_vertices(); ++v) ++h[degree(v)];
    return h;
  }

  /// Undirected edges (u < v), lexicographically sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(num_edges());
    for (std::uint32_t u = 0; u < num_vertices(); ++u) {
      for (const auto v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  const std::optional<StructuralParams>& predicted() const { return predicted_; }
  const std::map<std::size_t, std::size_t>& expected_degrees() const {
    return expected_degrees_;
  }

 private:
  friend class TopologyBuilder;
  Topology() = default;

  Family family_ = Family::custom;
  TopologyParams params_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::size_t> reverse_;
  std::vector<LinkClass> classes_;
  std::vector<Role> roles_;
  std::vector<std::string> labels_;
  std::optional<StructuralParams> predicted_;
  std::map<std::size_t, std::size_t> expected_degrees_;
};

/// Breadth-first reachability over a plain adjacency list.
inline bool is_connected(const std::vector<std::vector<std::uint32_t>>& adj) {
  if (adj.empty()) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (const auto v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == adj.size();
}

/// Accumulates edges and vertex metadata, then validates and freezes a
/// Topology. Structural violations are reported as invariant_error: the
/// builder is fed by generators, so a bad graph is a construction bug.
class TopologyBuilder {
 public:
  TopologyBuilder(Family family, TopologyParams params, std::size_t n)
      : family_(family), params_(std::move(params)), adj_(n), roles_(n, Role::leaf) {}

  std::size_t size() const { return adj_.size(); }

  void add_edge(std::uint32_t u, std::uint32_t v, LinkClass c = LinkClass::none) {
    detail::ensure(u < adj_.size() && v < adj_.size(), "edge endpoint out of range");
    detail::ensure(u != v, "self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    if (c != LinkClass::none) {
      if (classes_.empty()) classes_.resize(adj_.size());
      classes_[u].emplace_back(v, c);
      classes_[v].emplace_back(u, c);
    }
  }
  void set_role(std::uint32_t v, Role role) { roles_[v] = role; }
  void set_label(std::uint32_t v, std::string label) {
    if (labels_.empty()) labels_.resize(adj_.size());
    labels_[v] = std::move(label);
  }
  void set_predicted(StructuralParams p) { predicted_ = std::move(p); }
  void expect_degrees(std::map<std::size_t, std::size_t> histogram) {
    expected_degrees_ = std::move(histogram);
  }

  /// True when the graph accumulated so far is connected.
  bool connected() const { return is_connected(adj_); }

  Topology build() && {
    Topology t;
    t.family_ = family_;
    t.params_ = std::move(params_);
    const std::size_t n = adj_.size();
    t.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      auto& nb = adj_[v];
      std::sort(nb.begin(), nb.end());
      detail::ensure(std::adjacent_find(nb.begin(), nb.end()) == nb.end(),
                     "duplicate edge at vertex " + std::to_string(v));
      t.offsets_[v + 1] = t.offsets_[v] + nb.size();
    }
    detail::ensure(is_connected(adj_), "graph is disconnected");
    t.targets_.reserve(t.offsets_[n]);
    for (const auto& nb : adj_) t.targets_.insert(t.targets_.end(), nb.begin(), nb.end());
    t.reverse_.resize(t.targets_.size());
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::size_t a = t.offsets_[u]; a < t.offsets_[u + 1]; ++a) {
        t.reverse_[a] = t.find_arc(t.targets_[a], u);
      }
    }
    if (!classes_.empty()) {
      t.classes_.assign(t.targets_.size(), LinkClass::none);
      for (std::uint32_t u = 0; u < n; ++u) {
        for (const auto& [v, c] : classes_[u]) t.classes_[t.find_arc(u, v)] = c;
      }
    }
    t.roles_ = std::move(roles_);
    t.labels_ = std::move(labels_);
    t.predicted_ = std::move(predicted_);
    t.expected_degrees_ = std::move(expected_degrees_);
    if (!t.expected_degrees_.empty()) {
      detail::ensure(t.degree_histogram() == t.expected_degrees_,
                     "degree sequence of " + t.name() + " differs from prediction");
    }
    if (t.predicted_ && !t.predicted_->approximate) {
      detail::ensure(t.predicted_->N == Rational(n),
                     "vertex count of " + t.name() + " differs from prediction");
    }
    return t;
  }

 private:
  Family family_;
  TopologyParams params_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::vector<std::pair<std::uint32_t, LinkClass>>> classes_;
  std::vector<Role> roles_;
  std::vector<std::string> labels_;
  std::optional<StructuralParams> predicted_;
  std::map<std::size_t, std::size_t> expected_degrees_;
};

/// Graph from an explicit edge list (e.g. a file). Input problems are
/// precondition errors here, unlike generator output.
inline Topology topology_from_edges(
    std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
    const std::vector<Role>& roles = {}) {
  detail::require(n >= 1, "graph has no vertices");
  detail::require(roles.empty() || roles.size() == n, "role list does not match vertex count");
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& [u, v] : edges) {
    detail::require(u < n && v < n, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") references a missing vertex");
    detail::require(u != v, "self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    detail::require(std::adjacent_find(nb.begin(), nb.end()) == nb.end(), "duplicate edge");
  }
  detail::require(is_connected(adj), "graph is disconnected");
  TopologyBuilder b(Family::custom, {}, n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  for (std::size_t v = 0; v < roles.size(); ++v) b.set_role(static_cast<std::uint32_t>(v), roles[v]);
  return std::move(b).build();
}

}  // namespace projnet
