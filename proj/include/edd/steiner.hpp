#pragma once

#include <array>
#include <limits>
#include <set>
#include <vector>

#include "edd/mst.hpp"
#include "edd/shortest_paths.hpp"

namespace edd {

// A 3-subset of the destination set with its centroid: the node minimizing
// the summed hop distance to the three members.
struct Triple {
  std::array<NodeId, 3> members;  // ascending
  NodeId centroid = 0;
  double d_z = 0.0;  // sum of hop distances centroid -> members
};

// All C(|R|,3) unordered 3-subsets in ascending lexicographic order.
// Fewer than three destinations yield no triples and the contraction loop
// degenerates to a plain terminal MST.
inline std::vector<std::array<NodeId, 3>> enumerate_triples(const std::vector<NodeId>& destinations) {
  std::vector<NodeId> r(destinations);
  std::sort(r.begin(), r.end());
  std::vector<std::array<NodeId, 3>> out;
  const size_t k = r.size();
  if (k < 3) return out;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      for (size_t l = j + 1; l < k; ++l) out.push_back({r[i], r[j], r[l]});
  return out;
}

// Centroid of a triple over all graph nodes (destinations included), ties
// broken by smallest node id.
inline std::pair<NodeId, double> centroid(const MetricClosure& closure,
                                          const std::array<NodeId, 3>& z) {
  const int n = static_cast<int>(closure.apsp.dist.size()) - 1;
  NodeId best = 0;
  double best_sum = std::numeric_limits<double>::infinity();
  for (NodeId v = 1; v <= n; ++v) {
    double sum = 0.0;
    for (NodeId s : z) sum += closure.apsp.distance(v, s);
    if (sum < best_sum) {
      best_sum = sum;
      best = v;
    }
  }
  return {best, best_sum};
}

// F[z]: pairwise distances among the triple's members drop to zero, all
// other weights unchanged.  Contracting an already-zero edge is a no-op.
inline CompleteGraph contract_triple(const CompleteGraph& f, const std::array<NodeId, 3>& z) {
  CompleteGraph out = f;
  for (size_t a = 0; a < 3; ++a)
    for (size_t b = a + 1; b < 3; ++b) {
      int i = out.index_of(z[a]);
      int j = out.index_of(z[b]);
      out.w[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0.0;
      out.w[static_cast<size_t>(j)][static_cast<size_t>(i)] = 0.0;
    }
  return out;
}

inline CompleteGraph contract_edge(const CompleteGraph& f, NodeId u, NodeId v) {
  CompleteGraph out = f;
  int i = out.index_of(u);
  int j = out.index_of(v);
  out.w[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0.0;
  out.w[static_cast<size_t>(j)][static_cast<size_t>(i)] = 0.0;
  return out;
}

// save(u, v) = mst(F) - mst(F[e_(u,v)]): the largest edge weight on the
// MST path between u and v.
struct SaveMatrix {
  std::vector<NodeId> nodes;
  std::vector<std::vector<double>> save;

  double at(NodeId u, NodeId v) const {
    int i = -1, j = -1;
    for (size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k] == u) i = static_cast<int>(k);
      if (nodes[k] == v) j = static_cast<int>(k);
    }
    if (i < 0 || j < 0) throw std::invalid_argument("save matrix: unknown node pair");
    return save[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
};

namespace detail {

// Recursive max-edge split: drop the heaviest edge of the subtree, assign
// its weight to every pair straddling the cut, recurse on both sides.
inline void find_save_rec(const std::vector<NodeId>& nodes,
                          const std::map<NodeId, int>& index,
                          std::vector<std::vector<std::pair<NodeId, double>>>& adj,
                          std::vector<NodeId> component, SaveMatrix& out) {
  if (component.size() <= 1) return;
  // Heaviest edge within the component; ties go to the smallest (u, v) pair.
  double wmax = -1.0;
  NodeId eu = 0, ev = 0;
  for (NodeId u : component) {
    for (auto [v, w] : adj[static_cast<size_t>(index.at(u))]) {
      NodeId a = u, b = v;
      if (a > b) std::swap(a, b);
      if (w > wmax || (w == wmax && std::make_pair(a, b) < std::make_pair(eu, ev))) {
        wmax = w;
        eu = a;
        ev = b;
      }
    }
  }
  // Split into the two sides of (eu, ev).
  std::set<NodeId> side;
  std::vector<NodeId> stack{eu};
  side.insert(eu);
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (auto [v, w] : adj[static_cast<size_t>(index.at(u))]) {
      if ((u == eu && v == ev) || (u == ev && v == eu)) continue;
      if (!side.count(v)) {
        side.insert(v);
        stack.push_back(v);
      }
    }
  }
  std::vector<NodeId> m1, m2;
  for (NodeId v : component) (side.count(v) ? m1 : m2).push_back(v);
  for (NodeId a : m1)
    for (NodeId b : m2) {
      out.save[static_cast<size_t>(index.at(a))][static_cast<size_t>(index.at(b))] = wmax;
      out.save[static_cast<size_t>(index.at(b))][static_cast<size_t>(index.at(a))] = wmax;
    }
  // Remove the split edge before recursing.
  auto drop = [&](NodeId u, NodeId v) {
    auto& lst = adj[static_cast<size_t>(index.at(u))];
    for (size_t i = 0; i < lst.size(); ++i)
      if (lst[i].first == v) {
        lst.erase(lst.begin() + static_cast<long>(i));
        break;
      }
  };
  drop(eu, ev);
  drop(ev, eu);
  find_save_rec(nodes, index, adj, std::move(m1), out);
  find_save_rec(nodes, index, adj, std::move(m2), out);
}

}  // namespace detail

inline SaveMatrix find_save(const CompleteGraph& f, const MstResult& tree) {
  SaveMatrix out;
  out.nodes = f.nodes;
  const size_t k = f.nodes.size();
  out.save.assign(k, std::vector<double>(k, 0.0));
  std::map<NodeId, int> index;
  for (size_t i = 0; i < k; ++i) index[f.nodes[i]] = static_cast<int>(i);
  std::vector<std::vector<std::pair<NodeId, double>>> adj(k);
  for (auto [u, v] : tree.edges) {
    double w = f.w[static_cast<size_t>(index.at(u))][static_cast<size_t>(index.at(v))];
    adj[static_cast<size_t>(index.at(u))].emplace_back(v, w);
    adj[static_cast<size_t>(index.at(v))].emplace_back(u, w);
  }
  detail::find_save_rec(f.nodes, index, adj, f.nodes, out);
  return out;
}

// Undirected subtree of G spanning the destinations (plus any centroids the
// contraction loop committed to).  Edges are physical graph edges.
struct SteinerTree {
  std::vector<NodeId> nodes;
  std::vector<std::pair<NodeId, NodeId>> edges;  // (u, v) with u < v, sorted
  double cost = 0.0;
};

// One contraction-loop iteration, exposed for test introspection.
struct SteinerIterationLog {
  std::array<NodeId, 3> triple;
  NodeId centroid;
  double win;
  double mst_cost;
  bool accepted;
};

namespace detail {

// Expand a metric tree over `terminals` into physical graph edges, then
// re-extract a spanning tree (overlapping path expansions may form cycles)
// and prune non-terminal leaves.
inline SteinerTree expand_metric_tree(const Graph& g, const MetricClosure& closure,
                                      const std::vector<NodeId>& terminals,
                                      const MstResult& metric_tree) {
  std::set<NodeId> node_set(terminals.begin(), terminals.end());
  std::set<std::pair<NodeId, NodeId>> edge_set;
  for (auto [u, v] : metric_tree.edges) {
    auto path = closure.apsp.path(u, v);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      NodeId a = path[i], b = path[i + 1];
      if (a > b) std::swap(a, b);
      node_set.insert(a);
      node_set.insert(b);
      edge_set.insert({a, b});
    }
  }
  std::vector<NodeId> nodes(node_set.begin(), node_set.end());
  std::vector<std::tuple<double, NodeId, NodeId>> edges;
  for (auto [u, v] : edge_set) edges.emplace_back(1.0, u, v);

  SteinerTree st;
  if (nodes.size() == 1) {
    st.nodes = nodes;
    return st;
  }
  MstResult span = mst_over_edges(nodes, edges);

  // Iteratively drop non-terminal leaves.
  std::set<NodeId> terms(terminals.begin(), terminals.end());
  std::map<NodeId, std::set<NodeId>> adj;
  for (auto [u, v] : span.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end();) {
      if (it->second.size() == 1 && !terms.count(it->first)) {
        NodeId leaf = it->first;
        NodeId nb = *it->second.begin();
        adj[nb].erase(leaf);
        it = adj.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  for (auto& [v, nbs] : adj) {
    st.nodes.push_back(v);
    for (NodeId u : nbs)
      if (v < u) st.edges.emplace_back(v, u);
  }
  std::sort(st.edges.begin(), st.edges.end());
  st.cost = static_cast<double>(st.edges.size());
  return st;
}

}  // namespace detail

// Triple loss contraction: start from the terminal closure, repeatedly
// contract the triple with the best win = max save + min save - d(z), then
// build the tree over R and the committed centroids.
inline SteinerTree steiner_approx(const Graph& g, const std::vector<NodeId>& destinations,
                                  std::vector<SteinerIterationLog>* log = nullptr) {
  std::vector<NodeId> r(destinations);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  if (r.empty()) throw std::invalid_argument("steiner: empty destination set");

  MetricClosure closure = metric_closure(g, r);
  if (r.size() == 1) {
    SteinerTree st;
    st.nodes = r;
    return st;
  }

  CompleteGraph f = CompleteGraph::from_closure(closure);
  std::set<NodeId> w_set;

  auto triple_sets = enumerate_triples(r);
  std::vector<Triple> triples;
  triples.reserve(triple_sets.size());
  for (auto& z : triple_sets) {
    Triple t;
    t.members = z;
    auto [v, d] = centroid(closure, z);
    t.centroid = v;
    t.d_z = d;
    triples.push_back(t);
  }

  while (!triples.empty()) {
    MstResult m = mst(f);
    SaveMatrix save = find_save(f, m);
    // First triple in enumeration order wins ties.
    double best_win = -std::numeric_limits<double>::infinity();
    const Triple* best = nullptr;
    for (const Triple& t : triples) {
      double s01 = save.at(t.members[0], t.members[1]);
      double s02 = save.at(t.members[0], t.members[2]);
      double s12 = save.at(t.members[1], t.members[2]);
      double smax = std::max({s01, s02, s12});
      double smin = std::min({s01, s02, s12});
      double win = smax + smin - t.d_z;
      if (win > best_win) {
        best_win = win;
        best = &t;
      }
    }
    if (log)
      log->push_back({best->members, best->centroid, best_win, m.weight, best_win > 0.0});
    if (best_win <= 0.0) break;
    f = contract_triple(f, best->members);
    w_set.insert(best->centroid);
  }

  std::vector<NodeId> terminals(r);
  for (NodeId v : w_set)
    if (!std::binary_search(r.begin(), r.end(), v)) terminals.push_back(v);
  std::sort(terminals.begin(), terminals.end());

  MetricClosure final_closure = metric_closure(g, terminals);
  CompleteGraph final_f = CompleteGraph::from_closure(final_closure);
  MstResult metric_tree = mst(final_f);
  return detail::expand_metric_tree(g, final_closure, terminals, metric_tree);
}

}  // namespace edd
