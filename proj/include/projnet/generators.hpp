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

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "projnet/error.hpp"
#include "projnet/finite_field.hpp"
#include "projnet/projective_plane.hpp"
#include "projnet/structural_params.hpp"
#include "projnet/topology.hpp"

namespace projnet {

namespace detail {

inline TopologyParams q_params(std::uint64_t q) {
  TopologyParams p;
  p.q = q;
  return p;
}
inline TopologyParams n_params(std::uint64_t n) {
  TopologyParams p;
  p.n = n;
  return p;
}

inline std::string point_label(const GaloisField& f, std::array<std::uint32_t, 3> c) {
  return "(" + f.format(c[0]) + "," + f.format(c[1]) + "," + f.format(c[2]) + ")";
}

}  // namespace detail

/// Incidence graph of P2(F_q): vertices 0..n-1 are points, n..2n-1 lines
/// (by dual point index), with n = q^2 + q + 1.
inline Topology build_pn(std::uint64_t q) {
  const auto params = detail::q_params(q);
  const auto predicted = expected_params(Family::pn, params);
  const auto f = GaloisField::of_order(q);
  const auto points = plane_points(f);
  const auto orth = orthogonality_lists(f);
  const auto n = static_cast<std::uint32_t>(points.size());
  TopologyBuilder b(Family::pn, params, 2 * n);
  for (std::uint32_t p = 0; p < n; ++p) {
    const auto label = detail::point_label(f, points[p].codes());
    b.set_label(p, "P" + label);
    b.set_label(n + p, "L" + label);
    for (const auto l : orth[p]) b.add_edge(p, n + l);
  }
  b.set_predicted(predicted);
  b.expect_degrees({{q + 1, 2 * n}});
  return std::move(b).build();
}

/// Points of P2(F_q) joined when orthogonal and distinct.
inline Topology build_demi_pn(std::uint64_t q) {
  const auto params = detail::q_params(q);
  const auto predicted = expected_params(Family::demi_pn, params);
  const auto f = GaloisField::of_order(q);
  const auto points = plane_points(f);
  const auto orth = orthogonality_lists(f);
  const auto n = static_cast<std::uint32_t>(points.size());
  TopologyBuilder b(Family::demi_pn, params, n);
  for (std::uint32_t p = 0; p < n; ++p) {
    b.set_label(p, detail::point_label(f, points[p].codes()));
    for (const auto l : orth[p]) {
      if (p < l) b.add_edge(p, l);
    }
  }
  b.set_predicted(predicted);
  b.expect_degrees({{q, q + 1}, {q + 1, n - (q + 1)}});
  return std::move(b).build();
}

/// The local difference set X_0 of the MMS construction, as element codes
/// sorted by code.
inline std::vector<std::uint32_t> mms_local_set(const GaloisField& f) {
  const std::uint64_t q = f.order();
  detail::require(q >= 3, "mms requires q >= 3");
  const auto xi = f.primitive_element().code();
  std::vector<std::uint64_t> exponents;
  switch (detail::mms_epsilon(q)) {
    case 1:
    case 0:
      for (std::uint64_t e = 0; e + 1 < q; e += 2) exponents.push_back(e);
      break;
    default: {
      // q = 4w - 1: the even exponents below q/2 and the odd ones above it,
      // so the set is closed under negation (-1 = xi^(2w-1)).
      const std::uint64_t w = (q + 1) / 4;
      for (std::uint64_t e = 0; e <= 2 * w - 2; e += 2) exponents.push_back(e);
      for (std::uint64_t e = 2 * w - 1; e <= 4 * w - 3; e += 2) exponents.push_back(e);
    }
  }
  std::vector<std::uint32_t> set;
  for (const auto e : exponents) set.push_back(f.pow(xi, e));
  std::sort(set.begin(), set.end());
  return set;
}

/// MMS graph on 2q^2 vertices (s,x,y), id s*q^2 + x*q + y. Edges inside a
/// column (s,x) are local, edges between s = 0 and s = 1 global.
inline Topology build_mms(std::uint64_t q) {
  const auto params = detail::q_params(q);
  const auto predicted = expected_params(Family::mms, params);
  const auto f = GaloisField::of_order(q);
  const auto qq = static_cast<std::uint32_t>(q);
  const auto x0 = mms_local_set(f);
  std::vector<std::uint32_t> x1;
  const auto xi = f.primitive_element().code();
  for (const auto z : x0) x1.push_back(f.mul(xi, z));
  auto id = [&](std::uint32_t s, std::uint32_t x, std::uint32_t y) {
    return s * qq * qq + x * qq + y;
  };
  TopologyBuilder b(Family::mms, params, 2 * q * q);
  for (std::uint32_t s = 0; s < 2; ++s) {
    const auto& xs = s == 0 ? x0 : x1;
    for (std::uint32_t x = 0; x < qq; ++x) {
      for (std::uint32_t y = 0; y < qq; ++y) {
        b.set_label(id(s, x, y), "(" + std::to_string(s) + "," + f.format(x) + "," + f.format(y) + ")");
        for (const auto z : xs) {
          const auto y2 = f.sub(y, z);
          if (y < y2) b.add_edge(id(s, x, y), id(s, x, y2), LinkClass::local);
        }
      }
    }
  }
  // (0,x1,y1) ~ (1,x2,y2) iff y1 - y2 = x2 x1
  for (std::uint32_t x1c = 0; x1c < qq; ++x1c) {
    for (std::uint32_t y1 = 0; y1 < qq; ++y1) {
      for (std::uint32_t x2 = 0; x2 < qq; ++x2) {
        const auto y2 = f.sub(y1, f.mul(x2, x1c));
        b.add_edge(id(0, x1c, y1), id(1, x2, y2), LinkClass::global);
      }
    }
  }
  b.set_predicted(predicted);
  const std::size_t degree = (3 * q - detail::mms_epsilon(q)) / 2;
  b.expect_degrees({{degree, 2 * q * q}});
  return std::move(b).build();
}

/// Two-level orthogonal fat tree: columns 0 and 2 are leaf copies of the
/// points, column 1 holds spines. Vertex c*n + i is point i of column c.
inline Topology build_oft(std::uint64_t q) {
  const auto params = detail::q_params(q);
  const auto predicted = expected_params(Family::oft, params);
  const auto f = GaloisField::of_order(q);
  const auto points = plane_points(f);
  const auto orth = orthogonality_lists(f);
  const auto n = static_cast<std::uint32_t>(points.size());
  TopologyBuilder b(Family::oft, params, 3 * n);
  for (std::uint32_t p = 0; p < n; ++p) {
    const auto label = detail::point_label(f, points[p].codes());
    for (std::uint32_t c = 0; c < 3; ++c) b.set_label(c * n + p, std::to_string(c) + label);
    b.set_role(n + p, Role::spine);
    for (const auto l : orth[p]) {
      b.add_edge(p, n + l);
      b.add_edge(n + p, 2 * n + l);
    }
  }
  b.set_predicted(predicted);
  b.expect_degrees({{q + 1, 2 * n}, {2 * (q + 1), n}});
  return std::move(b).build();
}

/// Multi-layer full mesh: the incidence graph of K_n with every vertex
/// replicated n - 1 times. Leaves (i, r) come first with id i*(n-1) + r, then
/// one spine per pair i < j in lexicographic order.
inline Topology build_mlfm(std::uint64_t n) {
  const auto params = detail::n_params(n);
  const auto predicted = expected_params(Family::mlfm, params);
  const auto nn = static_cast<std::uint32_t>(n);
  const std::uint32_t leaves = nn * (nn - 1);
  TopologyBuilder b(Family::mlfm, params, leaves + nn * (nn - 1) / 2);
  for (std::uint32_t i = 0; i < nn; ++i) {
    for (std::uint32_t r = 0; r + 1 < nn; ++r) {
      b.set_label(i * (nn - 1) + r, "leaf" + std::to_string(i) + "." + std::to_string(r));
    }
  }
  std::uint32_t spine = leaves;
  for (std::uint32_t i = 0; i < nn; ++i) {
    for (std::uint32_t j = i + 1; j < nn; ++j, ++spine) {
      b.set_role(spine, Role::spine);
      b.set_label(spine, "spine" + std::to_string(i) + "-" + std::to_string(j));
      for (std::uint32_t r = 0; r + 1 < nn; ++r) {
        b.add_edge(i * (nn - 1) + r, spine);
        b.add_edge(j * (nn - 1) + r, spine);
      }
    }
  }
  b.set_predicted(predicted);
  std::map<std::size_t, std::size_t> degrees{{n - 1, leaves}};
  degrees[2 * (n - 1)] += n * (n - 1) / 2;
  b.expect_degrees(degrees);
  return std::move(b).build();
}

inline Topology build_complete(std::uint64_t n) {
  const auto params = detail::n_params(n);
  const auto predicted = expected_params(Family::complete, params);
  TopologyBuilder b(Family::complete, params, n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  b.set_predicted(predicted);
  b.expect_degrees({{n - 1, n}});
  return std::move(b).build();
}

/// K_{n,n}: side A is 0..n-1, side B n..2n-1.
inline Topology build_complete_bipartite(std::uint64_t n) {
  const auto params = detail::n_params(n);
  const auto predicted = expected_params(Family::complete_bipartite, params);
  const auto nn = static_cast<std::uint32_t>(n);
  TopologyBuilder b(Family::complete_bipartite, params, 2 * n);
  for (std::uint32_t u = 0; u < nn; ++u) {
    for (std::uint32_t v = 0; v < nn; ++v) b.add_edge(u, nn + v);
  }
  b.set_predicted(predicted);
  b.expect_degrees({{n, 2 * n}});
  return std::move(b).build();
}

/// Complete r-partite graph on n vertices with part sizes floor/ceil(n/r);
/// parts are consecutive id blocks, larger parts first.
inline Topology build_turan(std::uint64_t n, std::uint64_t r) {
  TopologyParams params;
  params.n = n;
  params.r = r;
  const auto predicted = expected_params(Family::turan, params);
  std::vector<std::uint32_t> part(n);
  std::map<std::size_t, std::size_t> degrees;
  std::uint32_t v = 0;
  for (std::uint32_t i = 0; i < r; ++i) {
    const std::uint64_t size = n / r + (i < n % r ? 1 : 0);
    degrees[n - size] += size;
    for (std::uint64_t k = 0; k < size; ++k) part[v++] = i;
  }
  TopologyBuilder b(Family::turan, params, n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t w = u + 1; w < n; ++w) {
      if (part[u] != part[w]) b.add_edge(u, w);
    }
  }
  b.set_predicted(predicted);
  b.expect_degrees(degrees);
  return std::move(b).build();
}

/// Field elements joined when their difference is a nonzero square.
inline Topology build_paley(std::uint64_t q) {
  const auto params = detail::q_params(q);
  const auto predicted = expected_params(Family::paley, params);
  const auto f = GaloisField::of_order(q);
  std::vector<char> square(q, 0);
  for (const auto& s : f.nonzero_squares()) square[s.code()] = 1;
  TopologyBuilder b(Family::paley, params, q);
  for (std::uint32_t a = 0; a < q; ++a) {
    b.set_label(a, f.format(a));
    for (std::uint32_t c = a + 1; c < q; ++c) {
      if (square[f.sub(a, c)]) b.add_edge(a, c);
    }
  }
  b.set_predicted(predicted);
  b.expect_degrees({{(q - 1) / 2, q}});
  return std::move(b).build();
}

/// Hamming graph K_n^dim: tuples with the first coordinate most significant,
/// joined when they differ in exactly one coordinate.
inline Topology build_hamming(std::uint64_t n, std::uint64_t dim = 2) {
  TopologyParams params;
  params.n = n;
  params.dim = dim;
  const auto predicted = expected_params(Family::hamming, params);
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < dim; ++i) {
    size *= n;
    detail::require(size <= (std::uint64_t{1} << 24), "hamming graph too large");
  }
  TopologyBuilder b(Family::hamming, params, size);
  for (std::uint64_t v = 0; v < size; ++v) {
    std::string label;
    std::uint64_t stride = 1;
    for (std::uint64_t i = 0; i < dim; ++i, stride *= n) {
      const std::uint64_t digit = (v / stride) % n;
      label = std::to_string(digit) + (label.empty() ? "" : "," + label);
      for (std::uint64_t d = digit + 1; d < n; ++d) {
        b.add_edge(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v + (d - digit) * stride));
      }
    }
    b.set_label(static_cast<std::uint32_t>(v), "(" + label + ")");
  }
  b.set_predicted(predicted);
  b.expect_degrees({{dim * (n - 1), size}});
  return std::move(b).build();
}

inline Topology build_hypercube(std::uint64_t n) {
  const auto params = detail::n_params(n);
  const auto predicted = expected_params(Family::hypercube, params);
  const std::uint64_t size = std::uint64_t{1} << n;
  detail::require(size <= (std::uint64_t{1} << 24), "hypercube too large");
  TopologyBuilder b(Family::hypercube, params, size);
  for (std::uint64_t v = 0; v < size; ++v) {
    for (std::uint64_t bit = 0; bit < n; ++bit) {
      const auto w = v ^ (std::uint64_t{1} << bit);
      if (v < w) b.add_edge(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(w));
    }
  }
  b.set_predicted(predicted);
  b.expect_degrees({{n, size}});
  return std::move(b).build();
}

/// Dragonfly with a = 2h routers per group and G = 2h^2 + 1 groups. Router r
/// of group g has global ports j = r*h + p (p < h); port j leads to group
/// (g + j + 1) mod G, arriving on port 2h^2 - 1 - j there. Router id g*a + r.
inline Topology build_dragonfly(std::uint64_t h) {
  TopologyParams params;
  params.h = h;
  const auto predicted = expected_params(Family::dragonfly, params);
  const std::uint64_t a = 2 * h;
  const std::uint64_t groups = 2 * h * h + 1;
  const std::uint64_t ports = 2 * h * h;
  TopologyBuilder b(Family::dragonfly, params, a * groups);
  for (std::uint64_t g = 0; g < groups; ++g) {
    for (std::uint64_t r = 0; r < a; ++r) {
      const auto u = static_cast<std::uint32_t>(g * a + r);
      b.set_label(u, std::to_string(g) + ":" + std::to_string(r));
      for (std::uint64_t r2 = r + 1; r2 < a; ++r2) {
        b.add_edge(u, static_cast<std::uint32_t>(g * a + r2), LinkClass::local);
      }
    }
    for (std::uint64_t j = 0; j < ports / 2; ++j) {
      const std::uint64_t peer_group = (g + j + 1) % groups;
      const std::uint64_t peer_port = ports - 1 - j;
      b.add_edge(static_cast<std::uint32_t>(g * a + j / h),
                 static_cast<std::uint32_t>(peer_group * a + peer_port / h), LinkClass::global);
    }
  }
  b.set_predicted(predicted);
  b.expect_degrees({{3 * h - 1, a * groups}});
  return std::move(b).build();
}

/// Uniformly paired random regular graph. Stubs are paired one random pair at
/// a time, rejecting loops and repeated edges; a stuck or disconnected
/// attempt restarts from scratch. Deterministic for a given seed.
inline Topology build_random_regular(std::uint64_t n, std::uint64_t degree, std::uint64_t seed) {
  TopologyParams params;
  params.n = n;
  params.degree = degree;
  params.seed = seed;
  const auto predicted = expected_params(Family::random_regular, params);
  boost::random::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::uint32_t> stubs;
    stubs.reserve(n * degree);
    for (std::uint32_t v = 0; v < n; ++v) stubs.insert(stubs.end(), degree, v);
    std::vector<std::vector<std::uint32_t>> adj(n);
    auto linked = [&](std::uint32_t u, std::uint32_t v) {
      return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
    };
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      const std::size_t tries = 50 * stubs.size() + 100;
      bool placed = false;
      for (std::size_t t = 0; t < tries && !placed; ++t) {
        boost::random::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
        const std::size_t i = pick(rng), j = pick(rng);
        const auto u = stubs[i], v = stubs[j];
        if (i == j || u == v || linked(u, v)) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
        const std::size_t hi = std::max(i, j), lo = std::min(i, j);
        stubs[hi] = stubs.back();
        stubs.pop_back();
        stubs[lo] = stubs.back();
        stubs.pop_back();
        placed = true;
      }
      stuck = !placed;
    }
    if (stuck || !is_connected(adj)) continue;
    TopologyBuilder b(Family::random_regular, params, n);
    for (std::uint32_t u = 0; u < n; ++u) {
      for (const auto v : adj[u]) {
        if (u < v) b.add_edge(u, v);
      }
    }
    b.set_predicted(predicted);
    b.expect_degrees({{degree, n}});
    return std::move(b).build();
  }
  throw invariant_error("random regular graph generation did not converge");
}

/// Builds any constructible family from its parameters.
inline Topology build(Family family, const TopologyParams& params) {
  validate_params(family, params);
  switch (family) {
    case Family::pn:
      return build_pn(*params.q);
    case Family::demi_pn:
      return build_demi_pn(*params.q);
    case Family::mms:
      return build_mms(*params.q);
    case Family::oft:
      return build_oft(*params.q);
    case Family::mlfm:
      return build_mlfm(*params.n);
    case Family::complete:
      return build_complete(*params.n);
    case Family::complete_bipartite:
      return build_complete_bipartite(*params.n);
    case Family::turan:
      return build_turan(*params.n, *params.r);
    case Family::paley:
      return build_paley(*params.q);
    case Family::hamming:
      return build_hamming(*params.n, params.dim.value_or(2));
    case Family::hypercube:
      return build_hypercube(*params.n);
    case Family::dragonfly:
      return build_dragonfly(*params.h);
    case Family::random_regular:
      return build_random_regular(*params.n, *params.degree, *params.seed);
    default:
      throw precondition_error(family_name(family) +
                               " has closed-form parameters only and cannot be constructed");
  }
}

/// Entry point for the classic reference families.
inline Topology build_classic(Family family, const TopologyParams& params) {
  switch (family) {
    case Family::complete:
    case Family::complete_bipartite:
    case Family::turan:
    case Family::paley:
    case Family::hamming:
    case Family::hypercube:
    case Family::dragonfly:
    case Family::random_regular:
      return build(family, params);
    default:
      throw precondition_error(family_name(family) + " is not a classic family");
  }
}

}  // namespace projnet
