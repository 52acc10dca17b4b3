#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "edd/graph.hpp"
#include "edd/solution.hpp"

namespace edd {

// Instance document:
//   { "n": 10, "edges": [[1,4], ...], "destinations": [2,3,...],
//     "gamma": 20.0, "d_limit": 1,
//     "e2e_costs": [[u,v,c], ...], "c2e_costs": [[v,c], ...] }   (both optional)
inline nlohmann::json instance_to_json(const EddInstance& inst) {
  nlohmann::json j;
  j["n"] = inst.graph().node_count();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : inst.graph().edges()) edges.push_back({u, v});
  j["edges"] = edges;
  j["destinations"] = inst.destinations();
  j["gamma"] = inst.gamma();
  j["d_limit"] = inst.d_limit();
  if (!inst.e2e_cost_map().empty()) {
    auto ec = nlohmann::json::array();
    for (auto& [e, c] : inst.e2e_cost_map()) ec.push_back({e.first, e.second, c});
    j["e2e_costs"] = ec;
  }
  if (!inst.c2e_cost_map().empty()) {
    auto cc = nlohmann::json::array();
    for (auto& [v, c] : inst.c2e_cost_map()) cc.push_back({v, c});
    j["c2e_costs"] = cc;
  }
  return j;
}

inline EddInstance instance_from_json(const nlohmann::json& j) {
  auto require = [&](const char* field) {
    if (!j.contains(field))
      throw std::runtime_error(std::string("instance: missing field '") + field + "'");
  };
  require("n");
  require("edges");
  require("destinations");
  require("gamma");
  require("d_limit");
  try {
    int n = j.at("n").get<int>();
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::runtime_error("instance: field 'edges' entries must be [u, v] pairs");
      edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
    }
    std::vector<NodeId> dests = j.at("destinations").get<std::vector<NodeId>>();
    double gamma = j.at("gamma").get<double>();
    int d_limit = j.at("d_limit").get<int>();
    std::map<std::pair<NodeId, NodeId>, double> e2e;
    if (j.contains("e2e_costs"))
      for (auto& e : j.at("e2e_costs")) {
        NodeId u = e[0].get<NodeId>(), v = e[1].get<NodeId>();
        if (u > v) std::swap(u, v);
        e2e[{u, v}] = e[2].get<double>();
      }
    std::map<NodeId, double> c2e;
    if (j.contains("c2e_costs"))
      for (auto& e : j.at("c2e_costs")) c2e[e[0].get<NodeId>()] = e[1].get<double>();
    return EddInstance(Graph(n, edges), std::move(dests), gamma, d_limit, std::move(e2e),
                       std::move(c2e));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("instance: malformed document: ") + e.what());
  }
}

// Solution document: transit set, directed E2E edges, per-node depth and a
// cost breakdown.  Serialization is canonical (sorted keys and lists), so
// identical solutions are byte-identical on disk.
inline nlohmann::json solution_to_json(const EddInstance& inst, const EddSolution& sol) {
  nlohmann::json j;
  j["transit"] = sol.transit;
  auto edges = nlohmann::json::array();
  for (auto [u, v] : sol.e2e_edges) edges.push_back({u, v});
  j["e2e_edges"] = edges;
  auto depths = nlohmann::json::array();
  for (NodeId v : sol.visited) depths.push_back({v, sol.depth.at(v)});
  j["depth"] = depths;
  j["visited"] = sol.visited;
  j["cost"] = {{"c2e", c2e_cost_of(inst, sol)},
               {"e2e", e2e_cost_of(inst, sol)},
               {"total", sol.cost}};
  return j;
}

inline EddSolution solution_from_json(const nlohmann::json& j) {
  try {
    EddSolution sol;
    sol.transit = j.at("transit").get<std::vector<NodeId>>();
    for (auto& e : j.at("e2e_edges"))
      sol.e2e_edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
    for (auto& d : j.at("depth")) sol.depth[d[0].get<NodeId>()] = d[1].get<int>();
    sol.visited = j.at("visited").get<std::vector<NodeId>>();
    sol.cost = j.at("cost").at("total").get<double>();
    sol.normalize();
    return sol;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("solution: malformed document: ") + e.what());
  }
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

inline void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace edd
