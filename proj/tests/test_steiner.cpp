#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "edd/fixtures.hpp"
#include "edd/generate.hpp"
#include "edd/steiner.hpp"
#include "oracles.hpp"

using namespace edd;

namespace {

Graph star4() {
  // Center 5, spokes 1..4.
  return Graph(5, {{5, 1}, {5, 2}, {5, 3}, {5, 4}});
}

void check_is_tree_spanning(const Graph& g, const SteinerTree& st,
                            const std::vector<NodeId>& terminals) {
  std::set<NodeId> nodes(st.nodes.begin(), st.nodes.end());
  for (NodeId t : terminals) REQUIRE(nodes.count(t));
  REQUIRE(st.edges.size() + 1 == nodes.size());
  std::map<NodeId, std::vector<NodeId>> adj;
  for (auto [u, v] : st.edges) {
    REQUIRE(g.has_edge(u, v));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<NodeId> seen{*nodes.begin()};
  std::vector<NodeId> stack{*nodes.begin()};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : adj[u])
      if (seen.insert(v).second) stack.push_back(v);
  }
  REQUIRE(seen == nodes);  // connected and acyclic together with the edge count
}

}  // namespace

TEST_CASE("triple enumeration is complete and ordered") {
  CHECK(enumerate_triples({4, 2, 9}).size() == 1);
  CHECK(enumerate_triples({1, 2}).empty());
  auto triples = enumerate_triples(paper10_instance().destinations());
  CHECK(triples.size() == 35);
  CHECK(std::is_sorted(triples.begin(), triples.end()));
  std::set<std::array<NodeId, 3>> uniq(triples.begin(), triples.end());
  CHECK(uniq.size() == 35);
}

TEST_CASE("centroid minimizes the summed distance") {
  SECTION("star center") {
    Graph g = star4();
    MetricClosure mc = metric_closure(g, {1, 2, 3, 4});
    auto [v, d] = centroid(mc, {1, 2, 3});
    CHECK(v == 5);
    CHECK(d == 3.0);
  }
  SECTION("centroid may itself be a destination") {
    Graph path(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    MetricClosure mc = metric_closure(path, {1, 2, 5});
    auto [v, d] = centroid(mc, {1, 2, 5});
    CHECK(v == 2);
    CHECK(d == 4.0);  // dist(2,1) + dist(2,5)
  }
  SECTION("agrees with brute force on the 10-node fixture") {
    EddInstance inst = paper10_instance();
    MetricClosure mc = metric_closure(inst.graph(), inst.destinations());
    for (auto& z : enumerate_triples(inst.destinations())) {
      NodeId best = 0;
      int best_sum = 1 << 20;
      for (NodeId v = 1; v <= 10; ++v) {
        int sum = 0;
        for (NodeId s : z) sum += v == s ? 0 : oracle::shortest_hops(inst.graph(), v, s);
        if (sum < best_sum) {
          best_sum = sum;
          best = v;
        }
      }
      auto [v, d] = centroid(mc, z);
      CHECK(v == best);
      CHECK(d == static_cast<double>(best_sum));
    }
  }
}

TEST_CASE("find_save matches the worked cases") {
  SECTION("two-edge path") {
    CompleteGraph f;
    f.nodes = {1, 2, 3};  // a=1, b=2, c=3
    f.w = {{0, 2, 9}, {2, 0, 3}, {9, 3, 0}};
    MstResult tree;
    tree.edges = {{1, 2}, {2, 3}};
    tree.weight = 5;
    SaveMatrix s = find_save(f, tree);
    CHECK(s.at(1, 3) == 3.0);
    CHECK(s.at(2, 3) == 3.0);
    CHECK(s.at(1, 2) == 2.0);
  }
  SECTION("single edge") {
    CompleteGraph f;
    f.nodes = {1, 2};
    f.w = {{0, 5}, {5, 0}};
    MstResult tree;
    tree.edges = {{1, 2}};
    tree.weight = 5;
    CHECK(find_save(f, tree).at(1, 2) == 5.0);
  }
  SECTION("uniform weights") {
    EddInstance inst = paper10_instance();
    CompleteGraph f = CompleteGraph::from_closure(metric_closure(inst.graph(), inst.destinations()));
    MstResult tree = mst(f);
    REQUIRE(tree.weight == 6.0);  // all edges weight 1
    SaveMatrix s = find_save(f, tree);
    for (NodeId a : f.nodes)
      for (NodeId b : f.nodes)
        if (a != b) CHECK(s.at(a, b) == 1.0);
  }
}

TEST_CASE("contraction zeroes a triple and is idempotent") {
  CompleteGraph f;
  f.nodes = {1, 2, 3};
  f.w = {{0, 2, 4}, {2, 0, 3}, {4, 3, 0}};
  CompleteGraph c = contract_triple(f, {1, 2, 3});
  CHECK(mst(c).weight == 0.0);
  CompleteGraph again = contract_triple(c, {1, 2, 3});
  CHECK(again.w == c.w);
  CHECK(f.w[0][1] == 2.0);  // input untouched
}

TEST_CASE("contracting a triple leaves the cheapest attachment for a fourth terminal") {
  CompleteGraph f;
  f.nodes = {1, 2, 3, 4};
  f.w = {{0, 2, 3, 7}, {2, 0, 2, 5}, {3, 2, 0, 6}, {7, 5, 6, 0}};
  CompleteGraph c = contract_triple(f, {1, 2, 3});
  CHECK(mst(c).weight == 5.0);  // min attachment of node 4
  CHECK(mst(c).weight == oracle::mst_weight(c.w));
}

TEST_CASE("save matrix equals the contraction definition on random closures") {
  int checked = 0;
  for (uint64_t seed = 1; checked < 60; ++seed) {
    int n = 6 + static_cast<int>(seed % 7);
    int r = 3 + static_cast<int>(seed % 5);  // up to 7 terminals
    if (r > n) continue;
    EddInstance inst = generate_instance(n, r, 1.5, 20.0, 2, seed);
    CompleteGraph f = CompleteGraph::from_closure(metric_closure(inst.graph(), inst.destinations()));
    // Half the trials run on a partially contracted working graph.
    if (seed % 2 == 0 && inst.destinations().size() >= 3) {
      auto triples = enumerate_triples(inst.destinations());
      f = contract_triple(f, triples[seed % triples.size()]);
    }
    SaveMatrix s = find_save(f, mst(f));
    auto expect = oracle::save_matrix(f.w);
    for (size_t i = 0; i < f.nodes.size(); ++i)
      for (size_t j = 0; j < f.nodes.size(); ++j)
        CHECK(s.save[i][j] == expect[i][j]);
    ++checked;
  }
}

TEST_CASE("win of a triple equals the MST drop from contracting it") {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    int n = 7 + static_cast<int>(seed % 6);
    EddInstance inst = generate_instance(n, 5, 1.5, 20.0, 2, seed);
    MetricClosure mc = metric_closure(inst.graph(), inst.destinations());
    CompleteGraph f = CompleteGraph::from_closure(mc);
    SaveMatrix s = find_save(f, mst(f));
    for (auto& z : enumerate_triples(inst.destinations())) {
      double s01 = s.at(z[0], z[1]), s02 = s.at(z[0], z[2]), s12 = s.at(z[1], z[2]);
      double drop = mst(f).weight - mst(contract_triple(f, z)).weight;
      CHECK(std::max({s01, s02, s12}) + std::min({s01, s02, s12}) == drop);
    }
  }
}

TEST_CASE("steiner approximation reproduces the published tree on the 10-node fixture") {
  EddInstance inst = paper10_instance();
  std::vector<SteinerIterationLog> log;
  SteinerTree st = steiner_approx(inst.graph(), inst.destinations(), &log);
  std::vector<std::pair<NodeId, NodeId>> expect{{2, 3}, {2, 4}, {2, 8}, {3, 5}, {3, 9}, {5, 6}};
  CHECK(st.edges == expect);
  CHECK(st.cost == 6.0);
  // The terminal MST is already optimal here: the loop accepts nothing.
  for (auto& it : log) CHECK_FALSE(it.accepted);
}

TEST_CASE("steiner approximation degenerate and star cases") {
  SECTION("single destination") {
    SteinerTree st = steiner_approx(paper10_instance().graph(), {7});
    CHECK(st.nodes == std::vector<NodeId>{7});
    CHECK(st.cost == 0.0);
  }
  SECTION("two destinations give a shortest path") {
    EddInstance inst = paper10_instance();
    SteinerTree st = steiner_approx(inst.graph(), {2, 6});
    CHECK(st.cost == 2.0);
    check_is_tree_spanning(inst.graph(), st, {2, 6});
  }
  SECTION("4-spoke star pulls in the center") {
    Graph g = star4();
    SteinerTree st = steiner_approx(g, {1, 2, 3, 4});
    CHECK(st.cost == 4.0);
    CompleteGraph f = CompleteGraph::from_closure(metric_closure(g, {1, 2, 3, 4}));
    CHECK(mst(f).weight == 6.0);  // the win the contraction realizes
    check_is_tree_spanning(g, st, {1, 2, 3, 4});
  }
}

TEST_CASE("steiner approximation output is a tree over R within quality bounds") {
  for (uint64_t seed = 1; seed <= 120; ++seed) {
    int n = 5 + static_cast<int>(seed % 6);  // up to 10 nodes
    int r = 2 + static_cast<int>(seed % 5);
    if (r > n) r = n;
    EddInstance inst = generate_instance(n, r, 1.5, 20.0, 2, seed);
    SteinerTree st = steiner_approx(inst.graph(), inst.destinations());
    if (inst.destinations().size() == 1) {
      CHECK(st.cost == 0.0);
      continue;
    }
    check_is_tree_spanning(inst.graph(), st, inst.destinations());

    CompleteGraph f =
        CompleteGraph::from_closure(metric_closure(inst.graph(), inst.destinations()));
    CHECK(st.cost <= mst(f).weight);

    double opt = oracle::steiner_cost(inst.graph(), inst.destinations());
    CHECK(st.cost <= 11.0 / 6.0 * opt + 1e-9);
  }
}
