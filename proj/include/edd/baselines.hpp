#pragma once

#include <map>
#include <queue>
#include <set>
#include <vector>

#include "edd/graph.hpp"
#include "edd/rng.hpp"
#include "edd/solution.hpp"

namespace edd {

namespace detail {

// Shared coverage machinery for the two reference strategies.  A candidate
// transit server claims destinations through BFS paths over nodes that no
// earlier round has touched, so the growing plan stays a forest of
// depth-consistent arborescences.
struct CoverageState {
  const EddInstance& inst;
  std::set<NodeId> visited;    // nodes already claimed by the plan
  std::set<NodeId> unserved;   // destinations still waiting for data
  EddSolution sol;

  explicit CoverageState(const EddInstance& instance) : inst(instance) {
    unserved.insert(inst.destinations().begin(), inst.destinations().end());
  }

  // BFS from s over unclaimed nodes, truncated at d_limit hops.
  // Returns (reached destinations, predecessor map).
  std::pair<std::vector<NodeId>, std::map<NodeId, NodeId>> reach(NodeId s) const {
    std::map<NodeId, NodeId> pred;
    std::map<NodeId, int> hops;
    std::vector<NodeId> found;
    if (visited.count(s)) return {found, pred};
    hops[s] = 0;
    if (unserved.count(s)) found.push_back(s);
    std::queue<NodeId> q;
    q.push(s);
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      if (hops[u] == inst.d_limit()) continue;
      for (NodeId v : inst.graph().neighbors(u)) {
        if (visited.count(v) || hops.count(v)) continue;
        hops[v] = hops[u] + 1;
        pred[v] = u;
        q.push(v);
        if (unserved.count(v)) found.push_back(v);
      }
    }
    return {found, pred};
  }

  // Commit s as a transit server serving `dests` through the BFS tree.
  void commit(NodeId s, const std::vector<NodeId>& dests,
              const std::map<NodeId, NodeId>& pred) {
    sol.transit.push_back(s);
    visited.insert(s);
    unserved.erase(s);
    std::set<std::pair<NodeId, NodeId>> edges(sol.e2e_edges.begin(), sol.e2e_edges.end());
    for (NodeId d : dests) {
      NodeId cur = d;
      while (cur != s) {
        NodeId p = pred.at(cur);
        edges.insert({p, cur});
        visited.insert(cur);
        unserved.erase(cur);
        cur = p;
      }
    }
    sol.e2e_edges.assign(edges.begin(), edges.end());
  }

  EddSolution finish() {
    sol.visited.assign(visited.begin(), visited.end());
    // Depths: transit roots at 1, children step by 1.
    std::map<NodeId, std::vector<NodeId>> children;
    for (auto [u, v] : sol.e2e_edges) children[u].push_back(v);
    std::queue<NodeId> q;
    for (NodeId s : sol.transit) {
      sol.depth[s] = 1;
      q.push(s);
    }
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (NodeId v : children[u]) {
        sol.depth[v] = sol.depth[u] + 1;
        q.push(v);
      }
    }
    sol.normalize();
    sol.cost = recompute_cost(inst, sol);
    return sol;
  }
};

}  // namespace detail

// Greedy Connectivity: repeatedly promote the node covering the most
// unserved destinations within d_limit hops (smallest id on ties).
inline EddSolution greedy_connectivity(const EddInstance& inst) {
  detail::CoverageState st(inst);
  while (!st.unserved.empty()) {
    NodeId best = 0;
    std::vector<NodeId> best_found;
    std::map<NodeId, NodeId> best_pred;
    for (NodeId v = 1; v <= inst.graph().node_count(); ++v) {
      if (st.visited.count(v)) continue;
      auto [found, pred] = st.reach(v);
      if (found.size() > best_found.size()) {
        best = v;
        best_found = std::move(found);
        best_pred = std::move(pred);
      }
    }
    // Every unserved destination covers at least itself, so a round always
    // makes progress.
    st.commit(best, best_found, best_pred);
  }
  return st.finish();
}

// Random strategy: sample candidate transit servers uniformly; candidates
// covering no new destination are discarded without a C2E charge.
inline EddSolution random_strategy(const EddInstance& inst, uint64_t seed) {
  detail::CoverageState st(inst);
  Rng rng(seed);
  std::set<NodeId> tried;
  while (!st.unserved.empty()) {
    std::vector<NodeId> candidates;
    for (NodeId v = 1; v <= inst.graph().node_count(); ++v)
      if (!st.visited.count(v) && !tried.count(v)) candidates.push_back(v);
    NodeId pick = candidates[static_cast<size_t>(rng.below(candidates.size()))];
    tried.insert(pick);
    auto [found, pred] = st.reach(pick);
    if (found.empty()) continue;
    st.commit(pick, found, pred);
  }
  return st.finish();
}

}  // namespace edd
