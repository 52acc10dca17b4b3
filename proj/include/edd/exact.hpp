#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "edd/mst.hpp"
#include "edd/shortest_paths.hpp"
#include "edd/solution.hpp"
#include "edd/steiner.hpp"

namespace edd {

enum class SolveStatus { kOptimal, kBudgetExceeded };

struct ExactResult {
  SolveStatus status = SolveStatus::kOptimal;
  EddSolution solution;
  uint64_t nodes_explored = 0;
};

namespace detail {

// Depth-labeled branch and bound over cloud-rooted trees.
//
// Destinations are processed in ascending id order; branching enumerates
// every simple attach path from the current tree (or the cloud) through
// unlabeled nodes to the next unserved destination.  Any pruned feasible
// tree decomposes uniquely into such a path sequence, so the search space
// is exhaustive and duplicate-free; bounds are admissible, so the incumbent
// at exhaustion is optimal.
class ExactSearch {
 public:
  ExactSearch(const EddInstance& inst, uint64_t budget)
      : inst_(inst),
        g_(inst.graph()),
        n_(inst.graph().node_count()),
        depth_limit_(inst.depth_limit()),
        budget_(budget),
        apsp_(all_pairs_bfs(inst.graph())) {
    depth_.assign(static_cast<size_t>(n_) + 1, -1);
    parent_.assign(static_cast<size_t>(n_) + 1, -1);
    min_e2e_ = std::numeric_limits<double>::infinity();
    for (auto [u, v] : g_.edges()) min_e2e_ = std::min(min_e2e_, inst_.edge_cost(u, v));
    for (NodeId d : inst_.destinations()) {
      double in = inst_.cloud_cost(d);
      for (NodeId u : g_.neighbors(d)) in = std::min(in, inst_.edge_cost(u, d));
      min_incoming_[d] = in;
    }
  }

  ExactResult run() {
    // Trivial incumbent: every destination attached straight to the cloud.
    best_cost_ = 0.0;
    for (NodeId d : inst_.destinations()) best_cost_ += inst_.cloud_cost(d);
    best_parent_.assign(static_cast<size_t>(n_) + 1, -1);
    best_depth_.assign(static_cast<size_t>(n_) + 1, -1);
    for (NodeId d : inst_.destinations()) {
      best_parent_[static_cast<size_t>(d)] = kCloud;
      best_depth_[static_cast<size_t>(d)] = 1;
    }

    aborted_ = false;
    dfs(0.0);

    ExactResult res;
    res.status = aborted_ ? SolveStatus::kBudgetExceeded : SolveStatus::kOptimal;
    res.nodes_explored = explored_;
    EddSolution& sol = res.solution;
    for (NodeId v = 1; v <= n_; ++v) {
      if (best_parent_[static_cast<size_t>(v)] < 0) continue;
      sol.visited.push_back(v);
      sol.depth[v] = best_depth_[static_cast<size_t>(v)];
      if (best_parent_[static_cast<size_t>(v)] == kCloud)
        sol.transit.push_back(v);
      else
        sol.e2e_edges.emplace_back(best_parent_[static_cast<size_t>(v)], v);
    }
    sol.normalize();
    sol.cost = recompute_cost(inst_, sol);
    return res;
  }

 private:
  struct Candidate {
    NodeId anchor;              // kCloud or a labeled node
    std::vector<NodeId> path;   // new nodes anchor-side first, ends at the destination
    double inc;                 // added cost of the whole path
  };

  NodeId next_unserved() const {
    for (NodeId d : inst_.destinations())
      if (depth_[static_cast<size_t>(d)] < 0) return d;
    return -1;
  }

  // Admissible bound on the cost still to pay from the current state:
  // every unserved destination needs its own incoming edge, and the single
  // most expensive destination needs a full attach path.  Only valid for
  // the state it was computed in (labeling nodes can cheapen attachments).
  double remaining_bound() const {
    double sum = 0.0;
    double far_attach = 0.0;
    for (NodeId d : inst_.destinations()) {
      if (depth_[static_cast<size_t>(d)] >= 0) continue;
      sum += min_incoming_.at(d);
      far_attach = std::max(far_attach, min_attach(d));
    }
    return std::max(sum, far_attach);
  }

  // State-independent part of the bound: distinct incoming edges of the
  // unserved destinations other than `skip`.  Safe to reuse after labeling.
  double static_rest(NodeId skip) const {
    double sum = 0.0;
    for (NodeId d : inst_.destinations()) {
      if (depth_[static_cast<size_t>(d)] >= 0 || d == skip) continue;
      sum += min_incoming_.at(d);
    }
    return sum;
  }

  // Cheapest conceivable way to connect d in the current state: straight
  // from the cloud, or hop-distance-many edges from a labeled node with
  // depth headroom, or a cloud-anchored path through some other node.
  double min_attach(NodeId d) const {
    double best = inst_.cloud_cost(d);
    for (NodeId u = 1; u <= n_; ++u) {
      int du = depth_[static_cast<size_t>(u)];
      int hops = apsp_.distance(u, d);
      if (du >= 1) {
        if (du + hops <= depth_limit_ && u != d)
          best = std::min(best, hops * min_e2e_);
      } else if (u != d && 1 + hops <= depth_limit_) {
        best = std::min(best, inst_.cloud_cost(u) + hops * min_e2e_);
      }
    }
    return best;
  }

  void enumerate(NodeId d, double cost_so_far, double rest, std::vector<Candidate>& out) {
    std::vector<NodeId> rev{d};
    std::vector<char> in_path(static_cast<size_t>(n_) + 1, 0);
    in_path[static_cast<size_t>(d)] = 1;
    extend(d, 0.0, cost_so_far, rest, rev, in_path, out);
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
      if (a.inc != b.inc) return a.inc < b.inc;
      if (a.anchor != b.anchor) return a.anchor < b.anchor;
      return a.path < b.path;
    });
  }

  void extend(NodeId head, double suffix_cost, double cost_so_far, double rest,
              std::vector<NodeId>& rev, std::vector<char>& in_path,
              std::vector<Candidate>& out) {
    const int k = static_cast<int>(rev.size());
    if (k <= depth_limit_) {
      double inc = inst_.cloud_cost(head) + suffix_cost;
      if (cost_so_far + inc + rest < best_cost_)
        out.push_back({kCloud, {rev.rbegin(), rev.rend()}, inc});
    }
    for (NodeId w : g_.neighbors(head)) {
      int dw = depth_[static_cast<size_t>(w)];
      if (dw >= 1) {
        if (dw + k <= depth_limit_) {
          double inc = suffix_cost + inst_.edge_cost(w, head);
          if (cost_so_far + inc + rest < best_cost_)
            out.push_back({w, {rev.rbegin(), rev.rend()}, inc});
        }
      } else if (!in_path[static_cast<size_t>(w)] && k + 1 <= depth_limit_) {
        double extra = inst_.edge_cost(w, head);
        if (cost_so_far + suffix_cost + extra + rest < best_cost_) {
          rev.push_back(w);
          in_path[static_cast<size_t>(w)] = 1;
          extend(w, suffix_cost + extra, cost_so_far, rest, rev, in_path, out);
          in_path[static_cast<size_t>(w)] = 0;
          rev.pop_back();
        }
      }
    }
  }

  void dfs(double cost) {
    if (aborted_) return;
    NodeId d = next_unserved();
    if (d < 0) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_parent_ = parent_;
        best_depth_ = depth_;
      }
      return;
    }
    if (cost + remaining_bound() >= best_cost_) return;

    std::vector<Candidate> cands;
    double rest = static_rest(d);
    enumerate(d, cost, rest, cands);
    for (const Candidate& c : cands) {
      if (aborted_) return;
      if (cost + c.inc + rest >= best_cost_) continue;  // incumbent may have improved
      if (++explored_ > budget_) {
        aborted_ = true;
        return;
      }
      int base = c.anchor == kCloud ? 0 : depth_[static_cast<size_t>(c.anchor)];
      NodeId prev = c.anchor;
      for (size_t i = 0; i < c.path.size(); ++i) {
        NodeId v = c.path[i];
        depth_[static_cast<size_t>(v)] = base + static_cast<int>(i) + 1;
        parent_[static_cast<size_t>(v)] = prev;
        prev = v;
      }
      dfs(cost + c.inc);
      for (NodeId v : c.path) {
        depth_[static_cast<size_t>(v)] = -1;
        parent_[static_cast<size_t>(v)] = -1;
      }
    }
  }

  const EddInstance& inst_;
  const Graph& g_;
  int n_;
  int depth_limit_;
  uint64_t budget_;
  AllPairs apsp_;

  std::vector<int> depth_;      // -1 = unlabeled; cloud is implicit depth 0
  std::vector<NodeId> parent_;  // -1 = unlabeled
  std::map<NodeId, double> min_incoming_;
  double min_e2e_ = 1.0;

  double best_cost_ = std::numeric_limits<double>::infinity();
  std::vector<NodeId> best_parent_;
  std::vector<int> best_depth_;
  uint64_t explored_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

// Provably minimum-cost plan, or budget-exceeded when the search tree grows
// past node_budget expansions.
inline ExactResult exact_solve(const EddInstance& inst, uint64_t node_budget = 10'000'000) {
  detail::ExactSearch search(inst, node_budget);
  return search.run();
}

// Exact minimum Steiner tree by enumeration over Steiner-point subsets;
// test oracle for the approximation-quality properties.
inline std::pair<std::vector<std::pair<NodeId, NodeId>>, double> brute_force_steiner(
    const Graph& g, const std::vector<NodeId>& terminals) {
  std::vector<NodeId> terms(terminals);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  if (terms.empty()) throw std::invalid_argument("brute_force_steiner: no terminals");
  const int n = g.node_count();
  std::vector<NodeId> others;
  for (NodeId v = 1; v <= n; ++v)
    if (!std::binary_search(terms.begin(), terms.end(), v)) others.push_back(v);
  if (others.size() > 20)
    throw std::invalid_argument("brute_force_steiner: instance too large for enumeration");

  AllPairs apsp = all_pairs_bfs(g);
  auto metric_mst = [&](const std::vector<NodeId>& nodes) {
    CompleteGraph f;
    f.nodes = nodes;
    const size_t k = nodes.size();
    f.w.assign(k, std::vector<double>(k, 0.0));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j)
        f.w[i][j] = static_cast<double>(apsp.distance(nodes[i], nodes[j]));
    return std::make_pair(f, mst(f));
  };

  double best = std::numeric_limits<double>::infinity();
  std::vector<NodeId> best_nodes;
  for (uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
    std::vector<NodeId> nodes(terms);
    for (size_t i = 0; i < others.size(); ++i)
      if (mask & (1u << i)) nodes.push_back(others[i]);
    std::sort(nodes.begin(), nodes.end());
    double w = nodes.size() == 1 ? 0.0 : metric_mst(nodes).second.weight;
    if (w < best) {
      best = w;
      best_nodes = nodes;
    }
  }

  if (best_nodes.size() == 1) return {{}, 0.0};
  MetricClosure mc = metric_closure(g, best_nodes);
  MstResult tree = metric_mst(best_nodes).second;
  SteinerTree st = detail::expand_metric_tree(g, mc, terms, tree);
  return {st.edges, st.cost};
}

}  // namespace edd
