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
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "projnet/error.hpp"
#include "projnet/rational.hpp"
#include "projnet/topology.hpp"

namespace projnet {

/// Which ordered vertex pairs exchange traffic.
enum class Scope { all, leaf };

inline Scope parse_scope(std::string_view s) {
  if (s == "all" || s == "all-pairs") return Scope::all;
  if (s == "leaf" || s == "leaf-to-leaf") return Scope::leaf;
  throw precondition_error("unknown scope '" + std::string(s) + "' (expected all or leaf)");
}
inline std::string scope_name(Scope s) { return s == Scope::all ? "all" : "leaf"; }

/// Vertices that send and receive traffic under a scope.
inline std::vector<std::uint32_t> scoped_vertices(const Topology& g, Scope scope) {
  if (scope == Scope::all) {
    std::vector<std::uint32_t> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0u);
    return all;
  }
  detail::require(g.has_spines(), "leaf scope requires a topology with spine vertices");
  return g.leaves();
}

struct DistanceReport {
  Scope scope = Scope::all;
  std::size_t vertices = 0;      // scoped vertex count n
  std::vector<std::uint64_t> W;  // W[t] over ordered scoped pairs, W[0] = 0
  std::uint32_t k = 0;           // diameter over scoped pairs
  Integer total_distance = 0;
  Rational kbar;                 // total_distance / (n (n - 1))
};

struct MetricsReport : DistanceReport {
  std::vector<Rational> arc_loads;  // indexed by arc
  Rational total_load;
  Rational max_load;
  Rational mean_load;
  Rational u;            // mean / max
  Rational a;            // Delta u / kbar
  std::size_t Delta = 0; // largest degree among scoped vertices
  std::map<LinkClass, Rational> load_by_class;
  std::map<LinkClass, std::size_t> arcs_by_class;
};

struct AnalysisOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  bool force_rational = false;
};

/// Distances from v to every vertex: W[t] = number of vertices at distance t
/// (W[0] = 1).
inline std::vector<std::uint64_t> vertex_distance_distribution(const Topology& g, std::uint32_t v) {
  std::vector<std::uint32_t> dist(g.num_vertices(), UINT32_MAX);
  std::vector<std::uint32_t> queue{v};
  dist[v] = 0;
  std::vector<std::uint64_t> W{1};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (const auto y : g.neighbors(x)) {
      if (dist[y] != UINT32_MAX) continue;
      dist[y] = dist[x] + 1;
      if (W.size() <= dist[y]) W.resize(dist[y] + 1, 0);
      ++W[dist[y]];
      queue.push_back(y);
    }
  }
  return W;
}

namespace detail {

inline unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

/// Runs body(worker, index) for index in [0, jobs) on a pool of workers.
template <class Body>
void parallel_for(unsigned workers, std::size_t jobs, Body&& body) {
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    try {
      for (std::size_t i = next++; i < jobs; i = next++) body(w, i);
    } catch (...) {
      errors[w] = std::current_exception();
      next = jobs;
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Breadth-first layers from one source with shortest-path counts.
struct ShortestPathDag {
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> dist;
  std::vector<std::uint64_t> sigma;
  bool sigma_overflow = false;

  void run(const Topology& g, std::uint32_t s) {
    const std::size_t n = g.num_vertices();
    order.clear();
    dist.assign(n, UINT32_MAX);
    sigma.assign(n, 0);
    sigma_overflow = false;
    dist[s] = 0;
    sigma[s] = 1;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const auto v = order[head];
      for (const auto w : g.neighbors(v)) {
        if (dist[w] == UINT32_MAX) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          if (__builtin_add_overflow(sigma[w], sigma[v], &sigma[w]) ||
              sigma[w] > (std::uint64_t{1} << 62)) {
            sigma_overflow = true;
          }
        }
      }
    }
  }
};

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

/// Per-worker exact accumulator: arc load = acc[arc] / scale.
struct ScaledAccumulator {
  std::vector<__int128> acc;
  __int128 scale = 1;
  bool overflow = false;

  // Makes `denominator` divide scale; returns scale / denominator.
  __int128 adopt(__int128 denominator) {
    __int128 g = denominator, b = scale;
    while (b != 0) {
      const __int128 t = g % b;
      g = b;
      b = t;
    }
    const __int128 factor = denominator / g;
    if (factor != 1) {
      __int128 next;
      if (__builtin_mul_overflow(scale, factor, &next)) {
        overflow = true;
        return 0;
      }
      for (auto& x : acc) {
        if (__builtin_mul_overflow(x, factor, &x)) {
          overflow = true;
          return 0;
        }
      }
      scale = next;
    }
    return scale / denominator;
  }
};

struct WorkerState {
  ShortestPathDag dag;
  std::vector<std::int64_t> E;
  ScaledAccumulator loads;
  std::vector<std::uint64_t> W;
  Integer total_distance = 0;
  std::uint32_t k = 0;
  bool unreachable = false;
};

// Exact rational fallback for one source: D(v) = [target]/sigma_v + sum D(succ).
inline void accumulate_rational(const Topology& g, std::uint32_t s, const std::vector<char>& target,
                                const ShortestPathDag& dag, std::vector<Rational>& loads) {
  std::vector<Integer> sigma(g.num_vertices(), 0);
  sigma[s] = 1;
  for (const auto v : dag.order) {
    for (const auto w : g.neighbors(v)) {
      if (dag.dist[w] == dag.dist[v] + 1) sigma[w] += sigma[v];
    }
  }
  std::vector<Rational> D(g.num_vertices(), 0);
  for (std::size_t i = dag.order.size(); i-- > 0;) {
    const auto v = dag.order[i];
    Rational d = (target[v] && v != s) ? Rational(1, 1) / Rational(sigma[v]) : Rational(0);
    const auto nb = g.neighbors(v);
    for (std::size_t j = 0; j < nb.size(); ++j) {
      const auto w = nb[j];
      if (dag.dist[w] != dag.dist[v] + 1 || D[w] == 0) continue;
      d += D[w];
      loads[g.arc_offset(v) + j] += Rational(sigma[v]) * D[w];
    }
    D[v] = d;
  }
}

}  // namespace detail

/// Distance distribution, diameter and average distance over scoped pairs.
inline DistanceReport distance_metrics(const Topology& g, Scope scope = Scope::all,
                                       const AnalysisOptions& options = {}) {
  const auto sources = scoped_vertices(g, scope);
  std::vector<char> target(g.num_vertices(), 0);
  for (const auto v : sources) target[v] = 1;
  const unsigned workers = detail::worker_count(options.threads, sources.size());
  std::vector<detail::WorkerState> state(workers);
  detail::parallel_for(workers, sources.size(), [&](unsigned w, std::size_t i) {
    auto& st = state[w];
    const auto s = sources[i];
    std::vector<std::uint32_t> dist(g.num_vertices(), UINT32_MAX);
    std::vector<std::uint32_t> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto x = queue[head];
      for (const auto y : g.neighbors(x)) {
        if (dist[y] == UINT32_MAX) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    for (const auto t : sources) {
      if (t == s) continue;
      if (dist[t] == UINT32_MAX) {
        st.unreachable = true;
        continue;
      }
      if (st.W.size() <= dist[t]) st.W.resize(dist[t] + 1, 0);
      ++st.W[dist[t]];
      st.k = std::max(st.k, dist[t]);
    }
  });
  DistanceReport r;
  r.scope = scope;
  r.vertices = sources.size();
  for (auto& st : state) {
    detail::require(!st.unreachable, "graph is disconnected within the traffic scope");
    if (r.W.size() < st.W.size()) r.W.resize(st.W.size(), 0);
    for (std::size_t t = 0; t < st.W.size(); ++t) r.W[t] += st.W[t];
    r.k = std::max(r.k, st.k);
  }
  if (r.W.empty()) r.W.assign(1, 0);
  for (std::size_t t = 1; t < r.W.size(); ++t) r.total_distance += Integer(r.W[t]) * t;
  const Integer pairs = Integer(r.vertices) * (r.vertices - 1);
  detail::require(pairs > 0, "traffic scope needs at least two vertices");
  r.kbar = Rational(r.total_distance, pairs);
  return r;
}

/// Exact loads on every directed arc when each ordered scoped pair (s, t)
/// sends one unit split evenly over all shortest s-t paths, plus the
/// distance statistics and utilization derived from them.
///
/// Per source, with sigma the shortest-path counts and D(v) the sum over
/// targets t below v of paths(v -> t) / sigma_t, arc v -> w carries
/// sigma_v * D(w). D is kept as an integer multiple of the lcm of the target
/// sigmas; per-arc totals are __int128 over a common scale, and any overflow
/// reruns the whole computation in arbitrary-precision rationals.
inline MetricsReport analyze(const Topology& g, Scope scope = Scope::all,
                             const AnalysisOptions& options = {}) {
  const auto sources = scoped_vertices(g, scope);
  const std::size_t n = g.num_vertices();
  std::vector<char> target(n, 0);
  for (const auto v : sources) target[v] = 1;
  const unsigned workers = detail::worker_count(options.threads, sources.size());
  std::vector<detail::WorkerState> state(workers);
  for (auto& st : state) st.loads.acc.assign(g.num_arcs(), 0);
  std::atomic<bool> exact_overflow{options.force_rational};

  detail::parallel_for(workers, sources.size(), [&](unsigned w, std::size_t i) {
    auto& st = state[w];
    const auto s = sources[i];
    auto& dag = st.dag;
    dag.run(g, s);
    std::uint64_t lcm = 1;
    bool big = dag.sigma_overflow;
    for (const auto t : sources) {
      if (t == s) continue;
      if (dag.dist[t] == UINT32_MAX) {
        st.unreachable = true;
        continue;
      }
      if (st.W.size() <= dag.dist[t]) st.W.resize(dag.dist[t] + 1, 0);
      ++st.W[dag.dist[t]];
      st.k = std::max(st.k, dag.dist[t]);
      if (!big) {
        const std::uint64_t f = dag.sigma[t] / detail::gcd_u64(lcm, dag.sigma[t]);
        if (__builtin_mul_overflow(lcm, f, &lcm) || lcm > (std::uint64_t{1} << 62) / n) big = true;
      }
    }
    if (big || exact_overflow) {
      exact_overflow = true;
      return;
    }
    auto& E = st.E;
    E.assign(n, 0);
    const __int128 factor = st.loads.adopt(lcm);
    if (st.loads.overflow) {
      exact_overflow = true;
      return;
    }
    for (std::size_t j = dag.order.size(); j-- > 0;) {
      const auto v = dag.order[j];
      std::int64_t e = (target[v] && v != s) ? static_cast<std::int64_t>(lcm / dag.sigma[v]) : 0;
      const auto nb = g.neighbors(v);
      const std::size_t base = g.arc_offset(v);
      const auto sv = static_cast<__int128>(dag.sigma[v]);
      for (std::size_t x = 0; x < nb.size(); ++x) {
        const auto y = nb[x];
        if (dag.dist[y] != dag.dist[v] + 1 || E[y] == 0) continue;
        e += E[y];
        auto& cell = st.loads.acc[base + x];
        __int128 term;
        if (__builtin_mul_overflow(sv * E[y], factor, &term) ||
            __builtin_add_overflow(cell, term, &cell)) {
          exact_overflow = true;
          return;
        }
      }
      E[v] = e;
    }
  });

  MetricsReport r;
  r.scope = scope;
  r.vertices = sources.size();
  for (auto& st : state) {
    detail::require(!st.unreachable, "graph is disconnected within the traffic scope");
    if (r.W.size() < st.W.size()) r.W.resize(st.W.size(), 0);
    for (std::size_t t = 0; t < st.W.size(); ++t) r.W[t] += st.W[t];
    r.k = std::max(r.k, st.k);
  }
  if (r.W.empty()) r.W.assign(1, 0);
  for (std::size_t t = 1; t < r.W.size(); ++t) r.total_distance += Integer(r.W[t]) * t;
  const Integer pairs = Integer(r.vertices) * (r.vertices - 1);
  detail::require(pairs > 0, "traffic scope needs at least two vertices");
  r.kbar = Rational(r.total_distance, pairs);

  r.arc_loads.assign(g.num_arcs(), Rational(0));
  if (exact_overflow) {
    std::vector<std::vector<Rational>> partial(workers, std::vector<Rational>(g.num_arcs(), 0));
    std::vector<detail::ShortestPathDag> dags(workers);
    detail::parallel_for(workers, sources.size(), [&](unsigned w, std::size_t i) {
      dags[w].run(g, sources[i]);
      detail::accumulate_rational(g, sources[i], target, dags[w], partial[w]);
    });
    for (const auto& p : partial) {
      for (std::size_t a = 0; a < p.size(); ++a) r.arc_loads[a] += p[a];
    }
  } else {
    // Merge onto a common scale.
    Integer scale = 1;
    for (const auto& st : state) {
      const Integer s = to_integer(st.loads.scale);
      scale = scale / boost::multiprecision::gcd(scale, s) * s;
    }
    std::vector<Integer> sum(g.num_arcs(), 0);
    for (const auto& st : state) {
      const Integer mult = scale / to_integer(st.loads.scale);
      for (std::size_t a = 0; a < sum.size(); ++a) {
        if (st.loads.acc[a] != 0) sum[a] += to_integer(st.loads.acc[a]) * mult;
      }
    }
    for (std::size_t a = 0; a < sum.size(); ++a) r.arc_loads[a] = Rational(sum[a], scale);
  }

  r.total_load = 0;
  r.max_load = 0;
  for (std::size_t a = 0; a < r.arc_loads.size(); ++a) {
    const auto& load = r.arc_loads[a];
    r.total_load += load;
    if (load > r.max_load) r.max_load = load;
    r.load_by_class[g.arc_class(a)] += load;
    ++r.arcs_by_class[g.arc_class(a)];
  }
  detail::ensure(r.total_load == Rational(r.total_distance),
                 "arc loads do not conserve flow: total load differs from total distance");
  r.mean_load = r.total_load / Rational(static_cast<std::int64_t>(g.num_arcs()));
  detail::ensure(r.max_load > 0, "no arc carries traffic");
  r.u = r.mean_load / r.max_load;
  for (const auto v : sources) r.Delta = std::max(r.Delta, g.degree(v));
  r.a = Rational(static_cast<std::int64_t>(r.Delta)) * r.u / r.kbar;
  return r;
}

/// Exact arc loads only.
inline std::vector<Rational> arc_loads(const Topology& g, Scope scope = Scope::all,
                                       const AnalysisOptions& options = {}) {
  return analyze(g, scope, options).arc_loads;
}

inline Rational utilization(const Topology& g, Scope scope = Scope::all,
                            const AnalysisOptions& options = {}) {
  return analyze(g, scope, options).u;
}

/// Histogram of arc loads: load -> number of arcs, ascending.
inline std::map<Rational, std::size_t> load_histogram(const MetricsReport& report) {
  std::map<Rational, std::size_t> h;
  for (const auto& l : report.arc_loads) ++h[l];
  return h;
}

}  // namespace projnet
