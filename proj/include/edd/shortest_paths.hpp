#pragma once

#include <queue>
#include <stdexcept>
#include <vector>

#include "edd/graph.hpp"

namespace edd {

// All-pairs hop distances with predecessor matrix for path reconstruction.
// pred[s][v] is the node before v on a shortest s->v path; pred[s][s] = s.
// Neighbors are expanded in ascending id order, so paths are deterministic.
struct AllPairs {
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<NodeId>> pred;

  int distance(NodeId u, NodeId v) const { return dist[static_cast<size_t>(u)][static_cast<size_t>(v)]; }

  // Node sequence u, ..., v along a shortest path.
  std::vector<NodeId> path(NodeId u, NodeId v) const {
    std::vector<NodeId> rev;
    NodeId cur = v;
    while (cur != u) {
      rev.push_back(cur);
      cur = pred[static_cast<size_t>(u)][static_cast<size_t>(cur)];
    }
    rev.push_back(u);
    return {rev.rbegin(), rev.rend()};
  }
};

inline AllPairs all_pairs_bfs(const Graph& g) {
  const int n = g.node_count();
  AllPairs ap;
  ap.dist.assign(static_cast<size_t>(n) + 1, std::vector<int>(static_cast<size_t>(n) + 1, -1));
  ap.pred.assign(static_cast<size_t>(n) + 1, std::vector<NodeId>(static_cast<size_t>(n) + 1, 0));
  for (NodeId s = 1; s <= n; ++s) {
    auto& dist = ap.dist[static_cast<size_t>(s)];
    auto& pred = ap.pred[static_cast<size_t>(s)];
    dist[static_cast<size_t>(s)] = 0;
    pred[static_cast<size_t>(s)] = s;
    std::queue<NodeId> q;
    q.push(s);
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (NodeId v : g.neighbors(u)) {
        if (dist[static_cast<size_t>(v)] < 0) {
          dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
          pred[static_cast<size_t>(v)] = u;
          q.push(v);
        }
      }
    }
  }
  return ap;
}

// Complete distance structure over a terminal set, with the full V x V
// distances retained for expanding metric edges back into graph paths.
struct MetricClosure {
  std::vector<NodeId> terminals;            // ordered as given (duplicates removed)
  std::vector<std::vector<int>> term_dist;  // |T| x |T| hop distances
  AllPairs apsp;

  int term_index(NodeId v) const {
    for (size_t i = 0; i < terminals.size(); ++i)
      if (terminals[i] == v) return static_cast<int>(i);
    throw std::invalid_argument("metric closure: unknown terminal");
  }
};

inline MetricClosure metric_closure(const Graph& g, const std::vector<NodeId>& terminals) {
  MetricClosure mc;
  for (NodeId t : terminals) {
    if (t < 1 || t > g.node_count())
      throw std::invalid_argument("metric closure: terminal " + std::to_string(t) +
                                  " not a graph node");
    bool dup = false;
    for (NodeId s : mc.terminals) dup = dup || s == t;
    if (!dup) mc.terminals.push_back(t);
  }
  mc.apsp = all_pairs_bfs(g);
  const size_t k = mc.terminals.size();
  mc.term_dist.assign(k, std::vector<int>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      mc.term_dist[i][j] = mc.apsp.distance(mc.terminals[i], mc.terminals[j]);
  return mc;
}

}  // namespace edd
