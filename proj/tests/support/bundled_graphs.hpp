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

#include <utility>
#include <vector>

#include "projnet/generators.hpp"
#include "projnet/metrics.hpp"

namespace projnet::testing {

/// Every generator instance with at most 64 routers over the parameter
/// ranges below, with the scopes that apply to it.
inline std::vector<std::pair<Topology, Scope>> bundled_graphs() {
  std::vector<std::pair<Topology, Scope>> out;
  auto add = [&](Topology g) {
    if (g.num_vertices() > 64) return;
    if (g.has_spines()) out.emplace_back(g, Scope::leaf);
    out.emplace_back(std::move(g), Scope::all);
  };
  for (std::uint64_t q = 2; q <= 7; ++q) {
    if (!is_prime_power(q)) continue;
    add(build_pn(q));
    add(build_demi_pn(q));
    add(build_oft(q));
    if (q >= 3) add(build_mms(q));
  }
  for (std::uint64_t q = 5; q <= 64; q += 4) {
    if (is_prime_power(q)) add(build_paley(q));
  }
  for (std::uint64_t n = 3; n <= 7; ++n) add(build_mlfm(n));
  for (std::uint64_t n = 2; n <= 10; ++n) add(build_complete(n));
  for (std::uint64_t n = 1; n <= 8; ++n) add(build_complete_bipartite(n));
  for (std::uint64_t r = 2; r <= 4; ++r) {
    for (std::uint64_t n = r; n <= 13; n += 3) add(build_turan(n, r));
  }
  for (std::uint64_t n = 2; n <= 8; ++n) add(build_hamming(n, 2));
  for (std::uint64_t n = 2; n <= 4; ++n) add(build_hamming(n, 3));
  for (std::uint64_t n = 1; n <= 6; ++n) add(build_hypercube(n));
  for (std::uint64_t h = 1; h <= 2; ++h) add(build_dragonfly(h));
  add(build_random_regular(30, 4, 1));
  add(build_random_regular(50, 3, 2));
  add(build_random_regular(64, 7, 3));
  return out;
}

}  // namespace projnet::testing
