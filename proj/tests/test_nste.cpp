#include <catch2/catch_amalgamated.hpp>

#include "edd/fixtures.hpp"
#include "edd/generate.hpp"
#include "edd/nste.hpp"
#include "oracles.hpp"

using namespace edd;

TEST_CASE("cloud attaches to the max-connectivity node") {
  SECTION("10-node fixture picks node 2") {
    EddInstance inst = paper10_instance();
    SteinerTree st = steiner_approx(inst.graph(), inst.destinations());
    DirectedTree dt = root_at_cloud(st, inst.graph());
    CHECK(dt.parent.at(2) == kCloud);
    CHECK(dt.depth.at(2) == 1);
    CHECK(dt.depth.at(3) == 2);
    CHECK(dt.depth.at(5) == 3);
    CHECK(dt.depth.at(6) == 4);
  }
  SECTION("single node") {
    SteinerTree st;
    st.nodes = {4};
    DirectedTree dt = root_at_cloud(st, paper10_instance().graph());
    CHECK(dt.parent.at(4) == kCloud);
    CHECK(dt.depth.at(4) == 1);
  }
  SECTION("path tree picks the middle") {
    Graph g(3, {{1, 2}, {2, 3}});
    SteinerTree st;
    st.nodes = {1, 2, 3};
    st.edges = {{1, 2}, {2, 3}};
    st.cost = 2;
    DirectedTree dt = root_at_cloud(st, g);
    CHECK(dt.parent.at(2) == kCloud);
  }
  SECTION("empty tree is an error") {
    SteinerTree st;
    CHECK_THROWS_AS(root_at_cloud(st, paper10_instance().graph()), std::invalid_argument);
  }
}

TEST_CASE("slicing the 10-node fixture reproduces the published plan") {
  EddInstance inst = paper10_instance();
  EddSolution sol = solve_nste(inst);
  CHECK(sol.transit == std::vector<NodeId>{2, 5});
  std::vector<std::pair<NodeId, NodeId>> expect{{2, 3}, {2, 4}, {2, 8}, {5, 6}, {5, 9}};
  CHECK(sol.e2e_edges == expect);
  CHECK(sol.cost == 45.0);  // 2 * gamma + 5
  CHECK(is_feasible(inst, sol));
}

TEST_CASE("a generous hop limit keeps the whole Steiner tree under one transit server") {
  EddInstance base = paper10_instance();
  EddInstance inst(base.graph(), base.destinations(), base.gamma(), 10);
  EddSolution sol = solve_nste(inst);
  CHECK(sol.transit == std::vector<NodeId>{2});
  CHECK(sol.cost == 26.0);  // gamma + 6 Steiner edges
  CHECK(is_feasible(inst, sol));
}

TEST_CASE("a zero hop limit attaches every destination to the cloud") {
  EddInstance base = paper10_instance();
  EddInstance inst(base.graph(), base.destinations(), base.gamma(), 0);
  EddSolution sol = solve_nste(inst);
  CHECK(sol.transit == inst.destinations());
  CHECK(sol.e2e_edges.empty());
  CHECK(sol.cost == 140.0);  // gamma * |R|
  CHECK(is_feasible(inst, sol));
}

TEST_CASE("prune removes chains that serve no destination") {
  EddInstance base = paper10_instance();
  EddInstance inst(base.graph(), {2}, base.gamma(), 3);
  DirectedTree dt;
  dt.parent = {{2, kCloud}, {3, 2}, {5, 3}, {10, 5}};  // 3-5-10 is dead weight
  dt.recompute_depths();
  EddSolution sol = prune(dt, inst);
  CHECK(sol.visited == std::vector<NodeId>{2});
  CHECK(sol.e2e_edges.empty());
  CHECK(sol.cost == inst.gamma());
  CHECK(is_feasible(inst, sol));
}

TEST_CASE("prune keeps a childless transit destination") {
  EddInstance base = paper10_instance();
  EddInstance inst(base.graph(), {2, 6}, base.gamma(), 1);
  DirectedTree dt;
  dt.parent = {{2, kCloud}, {6, kCloud}};
  dt.recompute_depths();
  EddSolution sol = prune(dt, inst);
  CHECK(sol.transit == std::vector<NodeId>{2, 6});
  CHECK(is_feasible(inst, sol));
}

TEST_CASE("prune is the identity when every node is a destination") {
  EddInstance inst = paper10_instance();
  SteinerTree st = steiner_approx(inst.graph(), inst.destinations());
  DirectedTree dt = root_at_cloud(st, inst.graph());
  EddInstance relaxed(inst.graph(), inst.destinations(), inst.gamma(), 10);
  EddSolution sol = prune(dt, relaxed);
  CHECK(sol.visited == inst.destinations());
  CHECK(sol.e2e_edges.size() == st.edges.size());
}

TEST_CASE("no edge of the final plan is removable without breaking feasibility") {
  EddInstance inst = paper10_instance();
  EddSolution sol = solve_nste(inst);
  REQUIRE(is_feasible(inst, sol));
  for (size_t i = 0; i < sol.e2e_edges.size(); ++i) {
    EddSolution cut = sol;
    cut.e2e_edges.erase(cut.e2e_edges.begin() + static_cast<long>(i));
    cut.cost = recompute_cost(inst, cut);
    CHECK_FALSE(is_feasible(inst, cut));
  }
  for (size_t i = 0; i < sol.transit.size(); ++i) {
    EddSolution cut = sol;
    cut.transit.erase(cut.transit.begin() + static_cast<long>(i));
    cut.cost = recompute_cost(inst, cut);
    CHECK_FALSE(is_feasible(inst, cut));
  }
}

TEST_CASE("sliced plans are feasible on random instances") {
  for (uint64_t seed = 1; seed <= 150; ++seed) {
    int n = 5 + static_cast<int>(seed % 16);
    int r = 1 + static_cast<int>(seed % 9);
    if (r > n) r = n;
    int d_limit = static_cast<int>(seed % 5);
    EddInstance inst = generate_instance(n, r, 1.5, 20.0, d_limit, seed);
    EddSolution sol = solve_nste(inst);
    auto violations = validate_solution(inst, sol);
    for (auto& v : violations) UNSCOPED_INFO(v.code << ": " << v.detail);
    CHECK(violations.empty());
  }
}

TEST_CASE("slicing cost never rises as the hop limit relaxes") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    int n = 6 + static_cast<int>(seed % 12);
    int r = 2 + static_cast<int>(seed % 6);
    if (r > n) r = n;
    double prev = std::numeric_limits<double>::infinity();
    for (int d_limit = 1; d_limit <= 8; ++d_limit) {
      EddInstance inst = generate_instance(n, r, 1.6, 20.0, d_limit, seed);
      double cost = solve_nste(inst).cost;
      CHECK(cost <= prev);
      prev = cost;
    }
  }
}

TEST_CASE("identical instances produce identical plans") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    EddInstance a = generate_instance(12, 5, 1.6, 20.0, 2, seed);
    EddInstance b = generate_instance(12, 5, 1.6, 20.0, 2, seed);
    EddSolution sa = solve_nste(a);
    EddSolution sb = solve_nste(b);
    CHECK(sa.transit == sb.transit);
    CHECK(sa.e2e_edges == sb.e2e_edges);
    CHECK(sa.depth == sb.depth);
    CHECK(sa.cost == sb.cost);
  }
}
