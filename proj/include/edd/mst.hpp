#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "edd/shortest_paths.hpp"

namespace edd {

// Complete weighted graph over an ordered node list (dense symmetric matrix,
// zero diagonal).  This is the working structure F of the triple-contraction
// loop, so weights are mutable through contraction helpers.
struct CompleteGraph {
  std::vector<NodeId> nodes;
  std::vector<std::vector<double>> w;

  int index_of(NodeId v) const {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == v) return static_cast<int>(i);
    throw std::invalid_argument("complete graph: unknown node");
  }

  double weight(NodeId u, NodeId v) const {
    return w[static_cast<size_t>(index_of(u))][static_cast<size_t>(index_of(v))];
  }

  static CompleteGraph from_closure(const MetricClosure& mc) {
    CompleteGraph f;
    f.nodes = mc.terminals;
    const size_t k = f.nodes.size();
    f.w.assign(k, std::vector<double>(k, 0.0));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) f.w[i][j] = static_cast<double>(mc.term_dist[i][j]);
    return f;
  }
};

struct MstResult {
  std::vector<std::pair<NodeId, NodeId>> edges;  // (u, v) with u < v
  double weight = 0.0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  size_t find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<size_t> parent_;
};

}  // namespace detail

// Kruskal with a fixed tie order (weight, smaller endpoint id, larger
// endpoint id) so identical inputs always yield the identical tree.
inline MstResult mst(const CompleteGraph& f) {
  const size_t k = f.nodes.size();
  if (k == 0) throw std::invalid_argument("mst: empty node set");
  MstResult out;
  if (k == 1) return out;

  struct E {
    double w;
    NodeId u, v;  // u < v
    size_t i, j;
  };
  std::vector<E> es;
  es.reserve(k * (k - 1) / 2);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      NodeId a = f.nodes[i], b = f.nodes[j];
      size_t ia = i, ib = j;
      if (a > b) {
        std::swap(a, b);
        std::swap(ia, ib);
      }
      es.push_back({f.w[i][j], a, b, ia, ib});
    }
  }
  std::sort(es.begin(), es.end(), [](const E& x, const E& y) {
    return std::tie(x.w, x.u, x.v) < std::tie(y.w, y.u, y.v);
  });
  detail::UnionFind uf(k);
  for (const E& e : es) {
    if (uf.unite(e.i, e.j)) {
      out.edges.emplace_back(e.u, e.v);
      out.weight += e.w;
      if (out.edges.size() == k - 1) break;
    }
  }
  if (out.edges.size() != k - 1) throw std::invalid_argument("mst: graph not connected");
  return out;
}

// Kruskal over an explicit edge list (used to re-extract a spanning tree of
// the physical expansion of a metric tree).  Same tie order as above.
inline MstResult mst_over_edges(const std::vector<NodeId>& nodes,
                                std::vector<std::tuple<double, NodeId, NodeId>> edges) {
  if (nodes.empty()) throw std::invalid_argument("mst: empty node set");
  std::vector<NodeId> idx(nodes);
  std::sort(idx.begin(), idx.end());
  auto pos = [&](NodeId v) {
    return static_cast<size_t>(std::lower_bound(idx.begin(), idx.end(), v) - idx.begin());
  };
  for (auto& [w, u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  MstResult out;
  detail::UnionFind uf(idx.size());
  for (auto& [w, u, v] : edges) {
    if (uf.unite(pos(u), pos(v))) {
      out.edges.emplace_back(u, v);
      out.weight += w;
    }
  }
  if (out.edges.size() != idx.size() - 1)
    throw std::invalid_argument("mst: edge list does not connect node set");
  return out;
}

}  // namespace edd
