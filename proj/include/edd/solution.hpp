#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "edd/graph.hpp"

namespace edd {

// Cloud-rooted distribution plan: initial transit set S, directed E2E edges,
// per-node depth labels (cloud hop counts as depth 1) and total cost.
struct EddSolution {
  std::vector<NodeId> transit;                       // S, sorted ascending
  std::vector<std::pair<NodeId, NodeId>> e2e_edges;  // directed u -> v, sorted
  std::map<NodeId, int> depth;                       // D_v for every visited node
  std::vector<NodeId> visited;                       // H, sorted ascending
  double cost = 0.0;

  void normalize() {
    std::sort(transit.begin(), transit.end());
    transit.erase(std::unique(transit.begin(), transit.end()), transit.end());
    std::sort(e2e_edges.begin(), e2e_edges.end());
    e2e_edges.erase(std::unique(e2e_edges.begin(), e2e_edges.end()), e2e_edges.end());
    std::sort(visited.begin(), visited.end());
    visited.erase(std::unique(visited.begin(), visited.end()), visited.end());
  }
};

struct Violation {
  std::string code;
  std::string detail;
};

inline double c2e_cost_of(const EddInstance& inst, const EddSolution& s) {
  double c = 0.0;
  for (NodeId v : s.transit) c += inst.cloud_cost(v);
  return c;
}

inline double e2e_cost_of(const EddInstance& inst, const EddSolution& s) {
  double c = 0.0;
  for (auto [u, v] : s.e2e_edges) c += inst.edge_cost(u, v);
  return c;
}

inline double recompute_cost(const EddInstance& inst, const EddSolution& s) {
  return c2e_cost_of(inst, s) + e2e_cost_of(inst, s);
}

// Checks the full constraint set of a plan and reports every violation with
// the offending node or edge.  An empty result means the plan is feasible.
inline std::vector<Violation> validate_solution(const EddInstance& inst, const EddSolution& sol) {
  std::vector<Violation> out;
  const Graph& g = inst.graph();
  const int n = g.node_count();
  auto bad_id = [&](NodeId v) { return v < 1 || v > n; };

  std::set<NodeId> visited(sol.visited.begin(), sol.visited.end());
  std::set<NodeId> transit(sol.transit.begin(), sol.transit.end());

  for (NodeId v : sol.visited)
    if (bad_id(v)) out.push_back({"bad-node", "visited node " + std::to_string(v) + " out of range"});
  for (NodeId v : sol.transit) {
    if (bad_id(v)) out.push_back({"bad-node", "transit node " + std::to_string(v) + " out of range"});
    if (!visited.count(v))
      out.push_back({"transit-not-visited", "transit node " + std::to_string(v) + " not in H"});
  }

  // Every destination must be visited.
  for (NodeId r : inst.destinations())
    if (!visited.count(r))
      out.push_back({"destination-missed", "destination " + std::to_string(r) + " not visited"});

  // The solution must use at least one cloud edge.
  if (sol.transit.empty()) out.push_back({"no-transit", "initial transit set S is empty"});

  // E2E edges must be real graph edges between visited nodes.
  std::map<NodeId, int> incoming;
  for (auto [u, v] : sol.e2e_edges) {
    std::string e = std::to_string(u) + "->" + std::to_string(v);
    if (bad_id(u) || bad_id(v)) {
      out.push_back({"bad-edge", "edge " + e + " has an endpoint out of range"});
      continue;
    }
    if (!g.has_edge(u, v)) out.push_back({"not-an-edge", "edge " + e + " is not in the graph"});
    if (!visited.count(u) || !visited.count(v))
      out.push_back({"edge-endpoint-unvisited", "edge " + e + " touches an unvisited node"});
    incoming[v] += 1;
  }

  // Tree property: transit nodes have no incoming E2E edge, every other
  // visited node exactly one.
  for (NodeId v : sol.visited) {
    int in = incoming.count(v) ? incoming[v] : 0;
    if (transit.count(v)) {
      if (in != 0)
        out.push_back({"transit-has-incoming",
                       "transit node " + std::to_string(v) + " has " + std::to_string(in) +
                           " incoming E2E edges"});
    } else if (in != 1) {
      out.push_back({"incoming-degree",
                     "visited node " + std::to_string(v) + " has " + std::to_string(in) +
                         " incoming E2E edges (expected 1)"});
    }
  }

  // Depth labels: defined exactly on H, within [1, D_limit], equal to 1
  // exactly on S, and stepping by 1 along every E2E edge.
  const int dmax = inst.depth_limit();
  for (NodeId v : sol.visited) {
    auto it = sol.depth.find(v);
    if (it == sol.depth.end()) {
      out.push_back({"depth-missing", "visited node " + std::to_string(v) + " has no depth"});
      continue;
    }
    int d = it->second;
    if (d < 1 || d > dmax)
      out.push_back({"depth-range", "node " + std::to_string(v) + " has depth " +
                                        std::to_string(d) + " outside [1, " + std::to_string(dmax) +
                                        "]"});
    if ((d == 1) != (transit.count(v) > 0))
      out.push_back({"depth-transit-mismatch",
                     "node " + std::to_string(v) + " has depth " + std::to_string(d) +
                         (transit.count(v) ? " but is a transit node" : " but is not a transit node")});
  }
  for (auto& [v, d] : sol.depth)
    if (!visited.count(v))
      out.push_back({"depth-on-unvisited", "depth given for unvisited node " + std::to_string(v)});
  for (auto [u, v] : sol.e2e_edges) {
    auto iu = sol.depth.find(u), iv = sol.depth.find(v);
    if (iu == sol.depth.end() || iv == sol.depth.end()) continue;
    if (iv->second - iu->second != 1)
      out.push_back({"depth-step", "edge " + std::to_string(u) + "->" + std::to_string(v) +
                                       " steps depth " + std::to_string(iu->second) + " to " +
                                       std::to_string(iv->second)});
  }

  // Reachability: every destination within d_limit E2E hops of some transit
  // node along the selected edges.
  std::map<NodeId, std::vector<NodeId>> children;
  for (auto [u, v] : sol.e2e_edges) children[u].push_back(v);
  std::map<NodeId, int> hops;
  std::queue<NodeId> q;
  for (NodeId s : sol.transit) {
    hops[s] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    auto it = children.find(u);
    if (it == children.end()) continue;
    for (NodeId v : it->second)
      if (!hops.count(v)) {
        hops[v] = hops[u] + 1;
        q.push(v);
      }
  }
  for (NodeId r : inst.destinations()) {
    auto it = hops.find(r);
    if (it == hops.end()) {
      if (visited.count(r))
        out.push_back({"unreachable", "destination " + std::to_string(r) +
                                          " not reachable from any transit node"});
    } else if (it->second > inst.d_limit()) {
      out.push_back({"hop-limit", "destination " + std::to_string(r) + " is " +
                                      std::to_string(it->second) + " E2E hops out (limit " +
                                      std::to_string(inst.d_limit()) + ")"});
    }
  }

  // Stored cost must match the recomputation from S and T.
  double expect = recompute_cost(inst, sol);
  if (std::abs(expect - sol.cost) > 1e-9)
    out.push_back({"cost-mismatch", "stored cost " + std::to_string(sol.cost) +
                                        " != recomputed " + std::to_string(expect)});
  return out;
}

inline bool is_feasible(const EddInstance& inst, const EddSolution& sol) {
  return validate_solution(inst, sol).empty();
}

}  // namespace edd
