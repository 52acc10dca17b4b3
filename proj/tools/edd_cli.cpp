// Command-line front end: solve single instances, validate plans, generate
// benchmark instances, run experiment sweeps and emit the built-in fixtures.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "edd/baselines.hpp"
#include "edd/eua.hpp"
#include "edd/exact.hpp"
#include "edd/fixtures.hpp"
#include "edd/generate.hpp"
#include "edd/instance_io.hpp"
#include "edd/nste.hpp"
#include "edd/sweep.hpp"

namespace {

void write_or_print(const std::string& out_path, const nlohmann::json& j) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    edd::save_json_file(out_path, j);
}

int cmd_solve(const std::string& instance_path, const std::string& algo, uint64_t seed,
              uint64_t exact_budget, const std::string& out_path) {
  edd::EddInstance inst = edd::instance_from_json(edd::load_json_file(instance_path));
  edd::EddSolution sol;
  if (algo == "nste") {
    sol = edd::solve_nste(inst);
  } else if (algo == "greedy") {
    sol = edd::greedy_connectivity(inst);
  } else if (algo == "random") {
    sol = edd::random_strategy(inst, seed);
  } else if (algo == "exact") {
    edd::ExactResult res = edd::exact_solve(inst, exact_budget);
    if (res.status == edd::SolveStatus::kBudgetExceeded) {
      std::cerr << "exact: node budget exceeded after " << res.nodes_explored << " nodes\n";
      return 2;
    }
    sol = res.solution;
  }
  auto violations = edd::validate_solution(inst, sol);
  if (!violations.empty()) {
    for (auto& v : violations) std::cerr << "infeasible: " << v.code << ": " << v.detail << "\n";
    return 1;
  }
  write_or_print(out_path, edd::solution_to_json(inst, sol));
  return 0;
}

int cmd_validate(const std::string& instance_path, const std::string& solution_path) {
  edd::EddInstance inst = edd::instance_from_json(edd::load_json_file(instance_path));
  edd::EddSolution sol = edd::solution_from_json(edd::load_json_file(solution_path));
  auto violations = edd::validate_solution(inst, sol);
  if (violations.empty()) {
    std::cout << "ok: cost " << sol.cost << " (c2e " << edd::c2e_cost_of(inst, sol) << ", e2e "
              << edd::e2e_cost_of(inst, sol) << ")\n";
    return 0;
  }
  for (auto& v : violations) std::cout << v.code << ": " << v.detail << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge data distribution solvers and benchmark harness"};
  app.require_subcommand(1);

  // solve
  std::string instance_path, solution_path, out_path, algo = "nste";
  uint64_t seed = 1;
  uint64_t exact_budget = 10'000'000;
  auto* solve = app.add_subcommand("solve", "solve an instance file with one algorithm");
  solve->add_option("instance", instance_path, "instance JSON file")->required();
  solve->add_option("--algo", algo, "algorithm")
      ->check(CLI::IsMember({"nste", "greedy", "random", "exact"}));
  solve->add_option("--seed", seed, "seed for the random strategy");
  solve->add_option("--exact-budget", exact_budget, "search-node budget for exact");
  solve->add_option("-o,--out", out_path, "write the solution here instead of stdout");

  // validate
  auto* validate = app.add_subcommand("validate", "check a solution file against an instance");
  validate->add_option("instance", instance_path, "instance JSON file")->required();
  validate->add_option("solution", solution_path, "solution JSON file")->required();

  // gen
  int n = 10, r_count = 3, d_limit = 2, knn = 3;
  double delta = 1.5, gamma = 20.0;
  std::string eua_path;
  auto* gen = app.add_subcommand("gen", "generate a random connected instance");
  gen->add_option("--n", n, "node count")->required();
  gen->add_option("--r", r_count, "destination count")->required();
  gen->add_option("--delta", delta, "edge density |E|/|V|");
  gen->add_option("--gamma", gamma, "C2E/E2E cost ratio");
  gen->add_option("--d-limit", d_limit, "hop limit")->required();
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--eua", eua_path, "geo-location CSV; build a proximity graph on the first n points");
  gen->add_option("--knn", knn, "neighbours per node in proximity mode");
  gen->add_option("-o,--out", out_path, "write the instance here instead of stdout");

  // sweep
  std::string config_path, csv_path, summary_path;
  int jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "run an experiment grid from a config file");
  sweep->add_option("config", config_path, "sweep config JSON file")->required();
  sweep->add_option("-o,--out", csv_path, "CSV output path")->required();
  sweep->add_option("--jobs", jobs, "cells to run concurrently");

  // fixtures
  std::string fixtures_dir = ".";
  auto* fixtures = app.add_subcommand("fixtures", "emit the built-in benchmark instances");
  fixtures->add_option("--out-dir", fixtures_dir, "directory for paper10.json and fig3.json");

  // eua
  auto* eua = app.add_subcommand("eua", "parse a geo-location CSV and report the point count");
  eua->add_option("csv", eua_path, "CSV with latitude/longitude columns")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(instance_path, algo, seed, exact_budget, out_path);
    if (validate->parsed()) return cmd_validate(instance_path, solution_path);
    if (gen->parsed()) {
      edd::EddInstance inst =
          eua_path.empty()
              ? edd::generate_instance(n, r_count, delta, gamma, d_limit, seed)
              : edd::instance_from_points(edd::load_eua(eua_path), n, r_count, knn, delta, gamma,
                                          d_limit, seed);
      write_or_print(out_path, edd::instance_to_json(inst));
      return 0;
    }
    if (sweep->parsed()) {
      edd::SweepConfig cfg = edd::sweep_config_from_json(edd::load_json_file(config_path));
      std::ofstream csv(csv_path);
      if (!csv) throw std::runtime_error("cannot write " + csv_path);
      edd::run_sweep(cfg, &csv, &std::cout, jobs);
      return 0;
    }
    if (fixtures->parsed()) {
      edd::save_json_file(fixtures_dir + "/paper10.json",
                          edd::instance_to_json(edd::paper10_instance()));
      edd::save_json_file(fixtures_dir + "/fig3.json", edd::instance_to_json(edd::fig3_instance()));
      std::cout << "wrote " << fixtures_dir << "/paper10.json and " << fixtures_dir
                << "/fig3.json\n";
      return 0;
    }
    if (eua->parsed()) {
      auto points = edd::load_eua(eua_path);
      std::cout << points.size() << " points\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
