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

// Brute-force reference for arc loads: every shortest path of every ordered
// pair is listed explicitly and receives an equal share of one unit.

#include <cstdint>
#include <deque>
#include <vector>

#include "projnet/metrics.hpp"

namespace projnet::testing {

inline std::vector<int> bfs_from(const Topology& g, std::uint32_t s) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<std::uint32_t> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (const auto v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

/// All shortest s-t paths as vertex sequences.
inline std::vector<std::vector<std::uint32_t>> all_shortest_paths(const Topology& g, std::uint32_t s,
                                                                  std::uint32_t t) {
  const auto to_t = bfs_from(g, t);
  std::vector<std::vector<std::uint32_t>> paths;
  std::vector<std::uint32_t> current{s};
  auto extend = [&](auto&& self, std::uint32_t v) -> void {
    if (v == t) {
      paths.push_back(current);
      return;
    }
    for (const auto w : g.neighbors(v)) {
      if (to_t[w] == to_t[v] - 1) {
        current.push_back(w);
        self(self, w);
        current.pop_back();
      }
    }
  };
  extend(extend, s);
  return paths;
}

inline std::vector<Rational> enumerated_arc_loads(const Topology& g, Scope scope) {
  const auto vertices = scoped_vertices(g, scope);
  std::vector<Rational> loads(g.num_arcs(), 0);
  for (const auto s : vertices) {
    for (const auto t : vertices) {
      if (s == t) continue;
      const auto paths = all_shortest_paths(g, s, t);
      const Rational share(1, static_cast<std::int64_t>(paths.size()));
      for (const auto& path : paths) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          loads[g.find_arc(path[i], path[i + 1])] += share;
        }
      }
    }
  }
  return loads;
}

}  // namespace projnet::testing
