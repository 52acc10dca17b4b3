#include <catch2/catch_amalgamated.hpp>

#include "edd/fixtures.hpp"
#include "edd/generate.hpp"
#include "edd/graph.hpp"
#include "edd/mst.hpp"
#include "edd/rng.hpp"
#include "edd/shortest_paths.hpp"
#include "edd/solution.hpp"
#include "oracles.hpp"

using namespace edd;

namespace {

EddSolution fig4_solution(const EddInstance& inst) {
  EddSolution sol;
  sol.transit = {8, 9};
  sol.e2e_edges = {{8, 2}, {8, 6}, {9, 3}, {9, 4}, {9, 5}};
  sol.visited = {2, 3, 4, 5, 6, 8, 9};
  sol.depth = {{8, 1}, {9, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}};
  sol.cost = recompute_cost(inst, sol);
  return sol;
}

}  // namespace

TEST_CASE("graph construction validates its invariants") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(4, {{1, 2}, {3, 4}}), std::invalid_argument);  // disconnected
  Graph g(3, {{1, 2}, {2, 3}, {2, 1}});                                // duplicate collapses
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 3));
}

TEST_CASE("instance validates destinations, gamma and d_limit") {
  Graph g(3, {{1, 2}, {2, 3}});
  CHECK_THROWS_AS(EddInstance(g, {}, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(EddInstance(g, {4}, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(EddInstance(g, {1}, 0.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(EddInstance(g, {1}, 1.0, -1), std::invalid_argument);
  EddInstance inst(g, {3, 1}, 2.5, 1);
  CHECK(inst.depth_limit() == 2);
  CHECK(inst.destinations() == std::vector<NodeId>{1, 3});
  CHECK(inst.cloud_cost(2) == 2.5);
  CHECK(inst.edge_cost(2, 1) == 1.0);
}

TEST_CASE("all_pairs_bfs distances match simple-path enumeration on the 10-node fixture") {
  EddInstance inst = paper10_instance();
  const Graph& g = inst.graph();
  AllPairs ap = all_pairs_bfs(g);

  for (NodeId v = 1; v <= g.node_count(); ++v) CHECK(ap.distance(v, v) == 0);
  CHECK(ap.distance(2, 6) == 2);
  CHECK(ap.distance(6, 9) == 2);

  for (NodeId u = 1; u <= g.node_count(); ++u)
    for (NodeId v = 1; v <= g.node_count(); ++v)
      CHECK(ap.distance(u, v) == (u == v ? 0 : oracle::shortest_hops(g, u, v)));
}

TEST_CASE("predecessor matrix reconstructs real shortest paths") {
  EddInstance inst = paper10_instance();
  AllPairs ap = all_pairs_bfs(inst.graph());
  for (NodeId u = 1; u <= 10; ++u)
    for (NodeId v = 1; v <= 10; ++v) {
      auto path = ap.path(u, v);
      REQUIRE(path.front() == u);
      REQUIRE(path.back() == v);
      CHECK(static_cast<int>(path.size()) - 1 == ap.distance(u, v));
      for (size_t i = 0; i + 1 < path.size(); ++i)
        CHECK(inst.graph().has_edge(path[i], path[i + 1]));
    }
}

TEST_CASE("metric closure basics") {
  SECTION("single terminal") {
    Graph g(2, {{1, 2}});
    MetricClosure mc = metric_closure(g, {2});
    REQUIRE(mc.terminals == std::vector<NodeId>{2});
    CHECK(mc.term_dist[0][0] == 0);
  }
  SECTION("path graph end points") {
    Graph g(3, {{1, 2}, {2, 3}});
    MetricClosure mc = metric_closure(g, {1, 3});
    CHECK(mc.term_dist[0][1] == 2);
  }
  SECTION("adjacent destination pairs on the 10-node fixture get weight 1") {
    EddInstance inst = paper10_instance();
    MetricClosure mc = metric_closure(inst.graph(), inst.destinations());
    auto d = [&](NodeId a, NodeId b) {
      return mc.term_dist[static_cast<size_t>(mc.term_index(a))][static_cast<size_t>(mc.term_index(b))];
    };
    CHECK(d(2, 3) == 1);
    CHECK(d(3, 5) == 1);
    CHECK(d(5, 6) == 1);
  }
  SECTION("unknown terminal is rejected") {
    Graph g(2, {{1, 2}});
    CHECK_THROWS_AS(metric_closure(g, {3}), std::invalid_argument);
  }
}

TEST_CASE("metric closure distance axioms hold on random instances") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    EddInstance inst = generate_instance(4 + static_cast<int>(seed % 10), 2, 1.4, 20.0, 2, seed);
    MetricClosure mc = metric_closure(inst.graph(), inst.destinations());
    const auto& d = mc.apsp.dist;
    const int n = inst.graph().node_count();
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) {
        CHECK(d[u][v] == d[v][u]);
        CHECK((d[u][v] == 0) == (u == v));
        if (u != v) CHECK(d[u][v] >= 1);
        for (int w = 1; w <= n; ++w) CHECK(d[u][w] <= d[u][v] + d[v][w]);
      }
  }
}

TEST_CASE("mst handles the documented cases") {
  SECTION("triangle") {
    CompleteGraph f;
    f.nodes = {1, 2, 3};
    f.w = {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}};
    MstResult r = mst(f);
    CHECK(r.weight == 3.0);
    CHECK(r.edges.size() == 2);
  }
  SECTION("single node") {
    CompleteGraph f;
    f.nodes = {7};
    f.w = {{0}};
    MstResult r = mst(f);
    CHECK(r.weight == 0.0);
    CHECK(r.edges.empty());
  }
  SECTION("empty node set is an error") {
    CompleteGraph f;
    CHECK_THROWS_AS(mst(f), std::invalid_argument);
  }
  SECTION("terminal closure of the 10-node fixture costs 6") {
    EddInstance inst = paper10_instance();
    MetricClosure mc = metric_closure(inst.graph(), inst.destinations());
    CompleteGraph f = CompleteGraph::from_closure(mc);
    MstResult r = mst(f);
    CHECK(r.weight == 6.0);
    CHECK(r.weight == oracle::mst_weight(f.w));
  }
}

TEST_CASE("mst weight equals exhaustive minimum on small random matrices") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 2 + static_cast<int>(rng.below(6));  // up to 7 nodes
    CompleteGraph f;
    for (int i = 0; i < k; ++i) f.nodes.push_back(i + 1);
    f.w.assign(static_cast<size_t>(k), std::vector<double>(static_cast<size_t>(k), 0.0));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        double w = 1.0 + static_cast<double>(rng.below(9));
        f.w[static_cast<size_t>(i)][static_cast<size_t>(j)] = w;
        f.w[static_cast<size_t>(j)][static_cast<size_t>(i)] = w;
      }
    CHECK(mst(f).weight == oracle::mst_weight(f.w));
  }
}

TEST_CASE("validator accepts the optimal plan of the worked example") {
  EddInstance inst = paper10_instance();
  EddSolution sol = fig4_solution(inst);
  CHECK(sol.cost == 45.0);
  auto violations = validate_solution(inst, sol);
  CAPTURE(violations.size());
  for (auto& v : violations) UNSCOPED_INFO(v.code << ": " << v.detail);
  CHECK(violations.empty());
}

TEST_CASE("validator flags every five children when the hop limit drops to zero") {
  EddInstance base = paper10_instance();
  EddInstance tight(base.graph(), base.destinations(), base.gamma(), 0);
  EddSolution sol = fig4_solution(tight);
  auto violations = validate_solution(tight, sol);
  int depth_range = 0;
  for (auto& v : violations)
    if (v.code == "depth-range") ++depth_range;
  CHECK(depth_range == 5);
}

TEST_CASE("validator rejects an empty transit set") {
  EddInstance inst = paper10_instance();
  EddSolution sol = fig4_solution(inst);
  sol.transit.clear();
  sol.cost = recompute_cost(inst, sol);
  auto violations = validate_solution(inst, sol);
  bool saw = false;
  for (auto& v : violations) saw = saw || v.code == "no-transit";
  CHECK(saw);
}

TEST_CASE("feasible solutions recompute to gamma*|S| + |T| under default costs") {
  EddInstance inst = paper10_instance();
  EddSolution sol = fig4_solution(inst);
  REQUIRE(is_feasible(inst, sol));
  CHECK(sol.cost == inst.gamma() * static_cast<double>(sol.transit.size()) +
                        static_cast<double>(sol.e2e_edges.size()));
}

TEST_CASE("vendor cost maps change the accounting but not feasibility") {
  EddInstance base = paper10_instance();
  std::map<std::pair<NodeId, NodeId>, double> e2e{{{2, 8}, 2.0}};
  std::map<NodeId, double> c2e{{8, 7.5}};
  EddInstance inst(base.graph(), base.destinations(), base.gamma(), base.d_limit(), e2e, c2e);
  EddSolution sol = fig4_solution(inst);
  REQUIRE(is_feasible(inst, sol));
  // S = {8, 9}: 7.5 + 20; edges 8->2 costs 2, the other four cost 1.
  CHECK(sol.cost == 7.5 + 20.0 + 2.0 + 4.0);
}
