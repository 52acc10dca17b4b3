#pragma once

#include <charconv>
#include <chrono>
#include <future>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "edd/baselines.hpp"
#include "edd/exact.hpp"
#include "edd/generate.hpp"
#include "edd/nste.hpp"
#include "edd/rng.hpp"

namespace edd {

// One experiment grid: algorithms x N x |R| x d_limit, `repetitions` seeds
// per cell.  |R| comes from r_values when given, otherwise from the
// destination density rho.
struct SweepConfig {
  std::vector<std::string> algorithms{"nste", "greedy", "random", "exact"};
  std::vector<int> n_values;
  std::vector<int> r_values;  // empty: derive r = max(1, round(rho * n))
  double rho = 0.25;
  std::vector<int> d_limit_values;
  double gamma = 20.0;
  double delta = 1.5;
  int repetitions = 1;
  uint64_t base_seed = 1;
  uint64_t exact_budget = 10'000'000;

  void validate() const {
    if (algorithms.empty()) throw std::invalid_argument("sweep: no algorithms");
    for (auto& a : algorithms)
      if (a != "nste" && a != "greedy" && a != "random" && a != "exact")
        throw std::invalid_argument("sweep: unknown algorithm '" + a + "'");
    if (n_values.empty()) throw std::invalid_argument("sweep: no n values");
    if (d_limit_values.empty()) throw std::invalid_argument("sweep: no d_limit values");
    if (r_values.empty() && !(rho > 0.0 && rho <= 1.0))
      throw std::invalid_argument("sweep: rho must be in (0, 1]");
    if (repetitions < 1) throw std::invalid_argument("sweep: repetitions must be positive");
    for (int n : n_values)
      if (std::floor(delta * n) < n - 1)
        throw std::invalid_argument("sweep: delta below connectivity floor for n=" +
                                    std::to_string(n));
  }
};

struct SweepResult {
  std::string algo;
  int n = 0;
  int r = 0;
  int d_limit = 0;
  double gamma = 0.0;
  double rho = 0.0;    // realized |R| / |V|
  double delta = 0.0;  // realized |E| / |V|
  uint64_t seed = 0;
  double cost = 0.0;
  double runtime_ms = 0.0;
  std::string status;  // ok | budget-exceeded

  bool operator==(const SweepResult&) const = default;
};

inline constexpr const char* kCsvHeader = "algo,n,r,d_limit,gamma,rho,delta,seed,cost,runtime_ms,status";

namespace detail {

// Shortest round-trip decimal form, so parse(emit(x)) == x.
inline std::string fmt_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

inline double parse_double(const std::string& s) {
  double x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::runtime_error("csv: bad number '" + s + "'");
  return x;
}

}  // namespace detail

inline std::string to_csv_row(const SweepResult& r) {
  std::ostringstream os;
  os << r.algo << ',' << r.n << ',' << r.r << ',' << r.d_limit << ','
     << detail::fmt_double(r.gamma) << ',' << detail::fmt_double(r.rho) << ','
     << detail::fmt_double(r.delta) << ',' << r.seed << ',' << detail::fmt_double(r.cost) << ','
     << detail::fmt_double(r.runtime_ms) << ',' << r.status;
  return os.str();
}

inline SweepResult from_csv_row(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      f.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  f.push_back(cur);
  if (f.size() != 11) throw std::runtime_error("csv: expected 11 fields, got row '" + line + "'");
  SweepResult r;
  r.algo = f[0];
  r.n = std::stoi(f[1]);
  r.r = std::stoi(f[2]);
  r.d_limit = std::stoi(f[3]);
  r.gamma = detail::parse_double(f[4]);
  r.rho = detail::parse_double(f[5]);
  r.delta = detail::parse_double(f[6]);
  r.seed = std::stoull(f[7]);
  r.cost = detail::parse_double(f[8]);
  r.runtime_ms = detail::parse_double(f[9]);
  r.status = f[10];
  return r;
}

inline std::vector<SweepResult> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
  if (line != kCsvHeader && line != std::string(kCsvHeader) + "\r")
    throw std::runtime_error("csv: unexpected header '" + line + "'");
  std::vector<SweepResult> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    rows.push_back(from_csv_row(line));
  }
  return rows;
}

// Run one algorithm on one instance.  The caller provides the per-cell seed
// (the random baseline consumes it).
inline SweepResult run_algorithm(const std::string& algo, const EddInstance& inst, uint64_t seed,
                                 uint64_t exact_budget) {
  SweepResult row;
  row.algo = algo;
  row.n = inst.graph().node_count();
  row.r = static_cast<int>(inst.destinations().size());
  row.d_limit = inst.d_limit();
  row.gamma = inst.gamma();
  row.rho = static_cast<double>(row.r) / row.n;
  row.delta = static_cast<double>(inst.graph().edge_count()) / row.n;
  row.seed = seed;
  row.status = "ok";

  auto t0 = std::chrono::steady_clock::now();
  EddSolution sol;
  if (algo == "nste") {
    sol = solve_nste(inst);
  } else if (algo == "greedy") {
    sol = greedy_connectivity(inst);
  } else if (algo == "random") {
    sol = random_strategy(inst, seed);
  } else if (algo == "exact") {
    ExactResult res = exact_solve(inst, exact_budget);
    if (res.status == SolveStatus::kBudgetExceeded) {
      row.status = "budget-exceeded";
      row.cost = 0.0;
      row.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
      return row;
    }
    sol = res.solution;
  } else {
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
  }
  auto t1 = std::chrono::steady_clock::now();
  row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  // Feasibility is re-checked before the row is reported anywhere.
  auto violations = validate_solution(inst, sol);
  if (!violations.empty())
    throw std::logic_error("sweep: " + algo + " produced an infeasible solution: " +
                           violations.front().code);
  row.cost = sol.cost;
  return row;
}

namespace detail {

struct Cell {
  int n, r, d_limit;
  uint64_t index;
};

// All rows of one grid cell.  Pure given the config and the cell, so cells
// can run on any schedule; any failure becomes a status, never an abort.
inline std::vector<SweepResult> run_cell(const SweepConfig& cfg, const Cell& cell) {
  std::vector<SweepResult> rows;
  for (int rep = 0; rep < cfg.repetitions; ++rep) {
    uint64_t seed = Rng::derive(cfg.base_seed, cell.index, static_cast<uint64_t>(rep));
    for (const std::string& algo : cfg.algorithms) {
      SweepResult row;
      row.algo = algo;
      row.n = cell.n;
      row.r = cell.r;
      row.d_limit = cell.d_limit;
      row.gamma = cfg.gamma;
      row.seed = seed;
      try {
        EddInstance inst =
            generate_instance(cell.n, cell.r, cfg.delta, cfg.gamma, cell.d_limit, seed);
        row = run_algorithm(algo, inst, seed, cfg.exact_budget);
      } catch (const std::exception&) {
        row.status = "error";
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace detail

// Full grid sweep.  Cells may execute concurrently (jobs > 1); rows go to
// `csv` in deterministic cell order through the single writer, flushed as
// each cell completes.  Per-cell seeds depend only on (base_seed, cell
// index, repetition), so results are schedule-independent.
inline std::vector<SweepResult> run_sweep(const SweepConfig& cfg, std::ostream* csv = nullptr,
                                          std::ostream* summary = nullptr, int jobs = 1) {
  cfg.validate();
  if (csv) *csv << kCsvHeader << '\n' << std::flush;

  std::vector<detail::Cell> cells;
  uint64_t index = 0;
  for (int n : cfg.n_values) {
    std::vector<int> r_list = cfg.r_values;
    if (r_list.empty()) {
      int r = std::max(1, static_cast<int>(std::lround(cfg.rho * n)));
      r_list.push_back(std::min(r, n));
    }
    for (int r : r_list)
      for (int d_limit : cfg.d_limit_values) {
        ++index;
        if (r > n) continue;  // infeasible grid point
        cells.push_back({n, r, d_limit, index});
      }
  }

  std::vector<SweepResult> rows;
  auto emit_cell = [&](const detail::Cell& cell, std::vector<SweepResult>&& cell_rows) {
    std::map<std::string, std::pair<double, int>> agg;
    for (auto& row : cell_rows) {
      if (csv) *csv << to_csv_row(row) << '\n';
      if (row.status == "ok") {
        agg[row.algo].first += row.cost;
        agg[row.algo].second += 1;
      }
      rows.push_back(std::move(row));
    }
    if (csv) csv->flush();
    if (summary) {
      *summary << "n=" << cell.n << " r=" << cell.r << " d_limit=" << cell.d_limit;
      for (const std::string& algo : cfg.algorithms) {
        auto it = agg.find(algo);
        *summary << ' ' << algo << "=";
        if (it == agg.end() || it->second.second == 0)
          *summary << "n/a";
        else
          *summary << detail::fmt_double(it->second.first / it->second.second);
      }
      *summary << '\n';
    }
  };

  if (jobs <= 1) {
    for (const auto& cell : cells) emit_cell(cell, detail::run_cell(cfg, cell));
  } else {
    for (size_t base = 0; base < cells.size(); base += static_cast<size_t>(jobs)) {
      size_t end = std::min(cells.size(), base + static_cast<size_t>(jobs));
      std::vector<std::future<std::vector<SweepResult>>> batch;
      for (size_t i = base; i < end; ++i)
        batch.push_back(std::async(std::launch::async,
                                   [&cfg, cell = cells[i]] { return detail::run_cell(cfg, cell); }));
      for (size_t i = base; i < end; ++i) emit_cell(cells[i], batch[i - base].get());
    }
  }
  return rows;
}

inline SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  SweepConfig cfg;
  if (j.contains("algorithms")) cfg.algorithms = j.at("algorithms").get<std::vector<std::string>>();
  cfg.n_values = j.at("n_values").get<std::vector<int>>();
  if (j.contains("r_values")) cfg.r_values = j.at("r_values").get<std::vector<int>>();
  if (j.contains("rho")) cfg.rho = j.at("rho").get<double>();
  cfg.d_limit_values = j.at("d_limit_values").get<std::vector<int>>();
  if (j.contains("gamma")) cfg.gamma = j.at("gamma").get<double>();
  if (j.contains("delta")) cfg.delta = j.at("delta").get<double>();
  if (j.contains("repetitions")) cfg.repetitions = j.at("repetitions").get<int>();
  if (j.contains("base_seed")) cfg.base_seed = j.at("base_seed").get<uint64_t>();
  if (j.contains("exact_budget")) cfg.exact_budget = j.at("exact_budget").get<uint64_t>();
  cfg.validate();
  return cfg;
}

}  // namespace edd
