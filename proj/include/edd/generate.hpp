#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "edd/eua.hpp"
#include "edd/graph.hpp"
#include "edd/rng.hpp"

namespace edd {

namespace detail {

// Uniform k-subset of 1..n via partial Fisher-Yates.
inline std::vector<NodeId> sample_nodes(int n, int k, Rng& rng) {
  std::vector<NodeId> pool(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i + 1;
  for (int i = 0; i < k; ++i) {
    size_t j = static_cast<size_t>(i) + static_cast<size_t>(rng.below(static_cast<uint64_t>(n - i)));
    std::swap(pool[static_cast<size_t>(i)], pool[j]);
  }
  return {pool.begin(), pool.begin() + k};
}

}  // namespace detail

// Random connected graph with floor(delta_target * n) edges: a random
// spanning tree plus uniformly sampled extra edges.  Deterministic per seed.
inline EddInstance generate_instance(int n, int r_count, double delta_target, double gamma,
                                     int d_limit, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate: n must be positive");
  if (r_count < 1 || r_count > n)
    throw std::invalid_argument("generate: r_count must be in [1, n]");
  const long target = static_cast<long>(std::floor(delta_target * n));
  const long max_edges = static_cast<long>(n) * (n - 1) / 2;
  if (target < n - 1)
    throw std::invalid_argument("generate: edge density below connectivity floor");
  if (target > max_edges)
    throw std::invalid_argument("generate: edge density above complete graph");

  Rng rng(seed);
  std::vector<NodeId> order = detail::sample_nodes(n, n, rng);
  std::set<std::pair<NodeId, NodeId>> edges;
  for (int i = 1; i < n; ++i) {
    NodeId u = order[static_cast<size_t>(i)];
    NodeId v = order[static_cast<size_t>(rng.below(static_cast<uint64_t>(i)))];
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  // Dense targets enumerate the complement instead of rejection sampling.
  if (target > max_edges * 3 / 4) {
    std::vector<std::pair<NodeId, NodeId>> missing;
    for (NodeId u = 1; u <= n; ++u)
      for (NodeId v = u + 1; v <= n; ++v)
        if (!edges.count({u, v})) missing.emplace_back(u, v);
    for (size_t i = 0; i + 1 < missing.size(); ++i) {
      size_t j = i + static_cast<size_t>(rng.below(missing.size() - i));
      std::swap(missing[i], missing[j]);
    }
    for (size_t i = 0; i < missing.size() && static_cast<long>(edges.size()) < target; ++i)
      edges.insert(missing[i]);
  } else {
    while (static_cast<long>(edges.size()) < target) {
      NodeId u = 1 + static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
      NodeId v = 1 + static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
      if (u == v) continue;
      edges.insert({std::min(u, v), std::max(u, v)});
    }
  }

  std::vector<NodeId> dests = detail::sample_nodes(n, r_count, rng);
  return EddInstance(Graph(n, {edges.begin(), edges.end()}), std::move(dests), gamma, d_limit);
}

// Proximity-graph variant seeded from geo-locations: connect each point to
// its k nearest neighbours, join the closest component pairs until the
// graph is connected, then top up with random edges to the density target.
inline EddInstance instance_from_points(const std::vector<GeoPoint>& points, int n, int r_count,
                                        int k_nearest, double delta_target, double gamma,
                                        int d_limit, uint64_t seed) {
  if (n < 1 || static_cast<size_t>(n) > points.size())
    throw std::invalid_argument("eua instance: need n points");
  Rng rng(seed);
  auto sq = [&](int i, int j) {
    double dx = points[static_cast<size_t>(i)].latitude - points[static_cast<size_t>(j)].latitude;
    double dy = points[static_cast<size_t>(i)].longitude - points[static_cast<size_t>(j)].longitude;
    return dx * dx + dy * dy;
  };
  std::set<std::pair<NodeId, NodeId>> edges;
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<double, int>> by_dist;
    for (int j = 0; j < n; ++j)
      if (j != i) by_dist.emplace_back(sq(i, j), j);
    std::sort(by_dist.begin(), by_dist.end());
    for (int t = 0; t < k_nearest && t < static_cast<int>(by_dist.size()); ++t) {
      NodeId u = i + 1, v = by_dist[static_cast<size_t>(t)].second + 1;
      edges.insert({std::min(u, v), std::max(u, v)});
    }
  }
  // Force connectivity: repeatedly join the two closest components.
  for (;;) {
    std::vector<int> comp(static_cast<size_t>(n) + 1, -1);
    int ncomp = 0;
    for (NodeId s = 1; s <= n; ++s) {
      if (comp[static_cast<size_t>(s)] >= 0) continue;
      std::vector<NodeId> stack{s};
      comp[static_cast<size_t>(s)] = ncomp;
      while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges) {
          NodeId other = a == u ? b : (b == u ? a : 0);
          if (other && comp[static_cast<size_t>(other)] < 0) {
            comp[static_cast<size_t>(other)] = ncomp;
            stack.push_back(other);
          }
        }
      }
      ++ncomp;
    }
    if (ncomp == 1) break;
    double best = std::numeric_limits<double>::infinity();
    std::pair<NodeId, NodeId> join{0, 0};
    for (NodeId u = 1; u <= n; ++u)
      for (NodeId v = u + 1; v <= n; ++v)
        if (comp[static_cast<size_t>(u)] != comp[static_cast<size_t>(v)] && sq(u - 1, v - 1) < best) {
          best = sq(u - 1, v - 1);
          join = {u, v};
        }
    edges.insert(join);
  }
  const long target = static_cast<long>(std::floor(delta_target * n));
  while (static_cast<long>(edges.size()) < target) {
    NodeId u = 1 + static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
    NodeId v = 1 + static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
    if (u == v) continue;
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  std::vector<NodeId> dests = detail::sample_nodes(n, r_count, rng);
  return EddInstance(Graph(n, {edges.begin(), edges.end()}), std::move(dests), gamma, d_limit);
}

}  // namespace edd
