#pragma once

#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "edd/graph.hpp"
#include "edd/solution.hpp"
#include "edd/steiner.hpp"

namespace edd {

// Cloud-rooted directed tree: parent map over graph nodes with the cloud as
// the single root at depth 0.
struct DirectedTree {
  std::map<NodeId, NodeId> parent;  // node -> parent (kCloud for the attach node)
  std::map<NodeId, int> depth;      // node -> D_v; cloud itself is depth 0

  std::map<NodeId, std::vector<NodeId>> children() const {
    std::map<NodeId, std::vector<NodeId>> ch;
    for (auto& [v, p] : parent) ch[p].push_back(v);
    for (auto& [p, vs] : ch) std::sort(vs.begin(), vs.end());
    return ch;
  }

  // Minimum depths from the cloud along tree edges (BFS).
  void recompute_depths() {
    depth.clear();
    auto ch = children();
    std::queue<std::pair<NodeId, int>> q;
    q.push({kCloud, 0});
    while (!q.empty()) {
      auto [u, d] = q.front();
      q.pop();
      auto it = ch.find(u);
      if (it == ch.end()) continue;
      for (NodeId v : it->second) {
        depth[v] = d + 1;
        q.push({v, d + 1});
      }
    }
  }
};

// Attach the cloud to the max-degree node of the Steiner tree (smallest id
// on ties) and orient every edge away from the cloud.
inline DirectedTree root_at_cloud(const SteinerTree& st, const Graph& g) {
  if (st.nodes.empty()) throw std::invalid_argument("root_at_cloud: empty tree");
  std::map<NodeId, std::vector<NodeId>> adj;
  for (NodeId v : st.nodes) adj[v];
  for (auto [u, v] : st.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  NodeId attach = 0;
  size_t best_deg = 0;
  for (auto& [v, nbs] : adj) {
    if (attach == 0 || nbs.size() > best_deg) {
      attach = v;
      best_deg = nbs.size();
    }
  }

  DirectedTree dt;
  dt.parent[attach] = kCloud;
  std::queue<NodeId> q;
  q.push(attach);
  std::set<NodeId> seen{attach};
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    auto& nbs = adj[u];
    std::sort(nbs.begin(), nbs.end());
    for (NodeId v : nbs) {
      if (!seen.count(v)) {
        seen.insert(v);
        dt.parent[v] = u;
        q.push(v);
      }
    }
  }
  dt.recompute_depths();
  return dt;
}

// Finalize a working tree into a plan: drop non-destination leaves and
// childless non-destination transits, recompute depths, tally cost.
inline EddSolution prune(const DirectedTree& tree, const EddInstance& inst) {
  std::map<NodeId, NodeId> parent = tree.parent;
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<NodeId> has_child;
    for (auto& [v, p] : parent) has_child.insert(p);
    for (auto it = parent.begin(); it != parent.end();) {
      if (!has_child.count(it->first) && !inst.is_destination(it->first)) {
        it = parent.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }

  DirectedTree final_tree;
  final_tree.parent = parent;
  final_tree.recompute_depths();

  EddSolution sol;
  for (auto& [v, p] : parent) {
    sol.visited.push_back(v);
    if (p == kCloud)
      sol.transit.push_back(v);
    else
      sol.e2e_edges.emplace_back(p, v);
  }
  sol.depth = final_tree.depth;
  sol.normalize();
  sol.cost = recompute_cost(inst, sol);
  return sol;
}

// Slice the rooted tree against the depth budget: keep in-budget
// destinations and pass-through nodes, re-attach out-of-budget destinations
// straight to the cloud and relax their graph neighbours through the new
// root, then prune.
inline EddSolution slice_and_tune(const DirectedTree& dt, const EddInstance& inst) {
  const Graph& g = inst.graph();
  const int depth_limit = inst.depth_limit();

  std::map<NodeId, NodeId> parent = dt.parent;  // working tree, mutated in place
  std::map<NodeId, int> depth = dt.depth;
  std::set<NodeId> visited;

  auto children_of = [&](NodeId u) {
    std::vector<NodeId> ch;
    for (auto& [v, p] : parent)
      if (p == u) ch.push_back(v);
    std::sort(ch.begin(), ch.end());
    return ch;
  };
  auto rerun_bfs = [&]() {
    DirectedTree t;
    t.parent = parent;
    t.recompute_depths();
    depth = t.depth;
  };

  // DFS from the cloud, children in ascending id order; the tree may be
  // re-shaped mid-traversal, so children are read when their parent is
  // expanded.
  std::vector<NodeId> stack = children_of(kCloud);
  std::reverse(stack.begin(), stack.end());
  std::set<NodeId> expanded;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (!visited.count(v)) {
      if (inst.is_destination(v) && depth[v] > depth_limit) {
        // Out-of-budget destination: re-attach to the cloud and pull closer
        // any still-unvisited graph neighbour that benefits within the
        // budget.  Visited nodes keep their committed edges.
        parent[v] = kCloud;
        depth[v] = 1;
        visited.insert(v);
        for (NodeId u : g.neighbors(v)) {
          if (!parent.count(u) || visited.count(u)) continue;
          if (depth[u] > depth[v] + 1 && depth[v] + 1 <= depth_limit && parent[u] != v) {
            parent[u] = v;
            depth[u] = depth[v] + 1;
          }
        }
        rerun_bfs();
      } else {
        // In-budget destination or pass-through node: keep its tree edge.
        visited.insert(v);
      }
    }
    if (!expanded.count(v)) {
      expanded.insert(v);
      auto ch = children_of(v);
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
  }

  DirectedTree worked;
  worked.parent = parent;
  worked.recompute_depths();
  return prune(worked, inst);
}

// Full pipeline: Steiner approximation, cloud rooting, depth slicing.
inline EddSolution solve_nste(const EddInstance& inst) {
  SteinerTree st = steiner_approx(inst.graph(), inst.destinations());
  DirectedTree dt = root_at_cloud(st, inst.graph());
  return slice_and_tune(dt, inst);
}

}  // namespace edd
