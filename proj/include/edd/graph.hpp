#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edd {

using NodeId = int;

// Node ids are 1..N; id 0 is the cloud sentinel and never appears in a Graph.
inline constexpr NodeId kCloud = 0;

// Undirected, connected, unit-weight ("hop") graph.  Immutable after
// construction; all invariants are checked up front.
class Graph {
 public:
  Graph(int node_count, const std::vector<std::pair<NodeId, NodeId>>& edges)
      : n_(node_count), adj_(static_cast<size_t>(node_count) + 1) {
    if (node_count <= 0) throw std::invalid_argument("graph: node_count must be positive");
    for (auto [u, v] : edges) {
      if (u < 1 || u > n_ || v < 1 || v > n_)
        throw std::invalid_argument("graph: edge endpoint out of range: " + std::to_string(u) +
                                    "-" + std::to_string(v));
      if (u == v) throw std::invalid_argument("graph: self-loop at node " + std::to_string(u));
      if (u > v) std::swap(u, v);
      edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    if (!connected())
      throw std::invalid_argument("graph: not connected");
  }

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Neighbors in ascending id order.
  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_.at(static_cast<size_t>(v)); }

  bool has_edge(NodeId u, NodeId v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Unique undirected edges as (u, v) with u < v, sorted.
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

 private:
  bool connected() const {
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    std::queue<NodeId> q;
    q.push(1);
    seen[1] = 1;
    int reached = 1;
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (NodeId v : adj_[static_cast<size_t>(u)]) {
        if (!seen[static_cast<size_t>(v)]) {
          seen[static_cast<size_t>(v)] = 1;
          ++reached;
          q.push(v);
        }
      }
    }
    return reached == n_;
  }

  int n_;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
};

// Problem instance: graph, destination set R, C2E/E2E cost ratio gamma and
// the vendor hop limit d_limit.  The optional cost maps generalize the
// uniform objective (edge cost 1, cloud cost gamma); they never affect hop
// distances, only cost accounting.
class EddInstance {
 public:
  EddInstance(Graph graph, std::vector<NodeId> destinations, double gamma, int d_limit,
              std::map<std::pair<NodeId, NodeId>, double> e2e_cost = {},
              std::map<NodeId, double> c2e_cost = {})
      : graph_(std::move(graph)),
        destinations_(std::move(destinations)),
        gamma_(gamma),
        d_limit_(d_limit),
        e2e_cost_(std::move(e2e_cost)),
        c2e_cost_(std::move(c2e_cost)) {
    std::sort(destinations_.begin(), destinations_.end());
    destinations_.erase(std::unique(destinations_.begin(), destinations_.end()),
                        destinations_.end());
    if (destinations_.empty()) throw std::invalid_argument("instance: empty destination set");
    for (NodeId r : destinations_)
      if (r < 1 || r > graph_.node_count())
        throw std::invalid_argument("instance: destination " + std::to_string(r) +
                                    " not a graph node");
    if (!(gamma_ > 0)) throw std::invalid_argument("instance: gamma must be positive");
    if (d_limit_ < 0) throw std::invalid_argument("instance: d_limit must be non-negative");
    for (auto& [e, c] : e2e_cost_) {
      if (!graph_.has_edge(e.first, e.second) || e.first > e.second)
        throw std::invalid_argument("instance: e2e cost on non-edge");
      if (!(c > 0)) throw std::invalid_argument("instance: e2e cost must be positive");
    }
    for (auto& [v, c] : c2e_cost_) {
      if (v < 1 || v > graph_.node_count())
        throw std::invalid_argument("instance: c2e cost on unknown node");
      if (!(c > 0)) throw std::invalid_argument("instance: c2e cost must be positive");
    }
  }

  const Graph& graph() const { return graph_; }
  const std::vector<NodeId>& destinations() const { return destinations_; }
  double gamma() const { return gamma_; }
  int d_limit() const { return d_limit_; }

  // Depth budget including the C2E hop.
  int depth_limit() const { return d_limit_ + 1; }

  bool is_destination(NodeId v) const {
    return std::binary_search(destinations_.begin(), destinations_.end(), v);
  }

  double edge_cost(NodeId u, NodeId v) const {
    if (u > v) std::swap(u, v);
    auto it = e2e_cost_.find({u, v});
    return it == e2e_cost_.end() ? 1.0 : it->second;
  }

  double cloud_cost(NodeId v) const {
    auto it = c2e_cost_.find(v);
    return it == c2e_cost_.end() ? gamma_ : it->second;
  }

  const std::map<std::pair<NodeId, NodeId>, double>& e2e_cost_map() const { return e2e_cost_; }
  const std::map<NodeId, double>& c2e_cost_map() const { return c2e_cost_; }

 private:
  Graph graph_;
  std::vector<NodeId> destinations_;
  double gamma_;
  int d_limit_;
  std::map<std::pair<NodeId, NodeId>, double> e2e_cost_;
  std::map<NodeId, double> c2e_cost_;
};

}  // namespace edd
