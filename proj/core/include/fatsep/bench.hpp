#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fatsep/exact_solver.hpp"
#include "fatsep/ptas.hpp"

namespace fatsep {

struct BenchRecord {
  std::string label;
  int n = 0;
  int d = 0;
  std::string family;
  std::string solver;
  int value = 0;
  std::int64_t nodes = 0;
  int depth = 0;
  double wall_ms = 0.0;
  std::string config_digest;
  /// log(nodes) / (p^((d-1)/d) log n), the exponent K the row needs.
  double node_law_exponent = 0.0;
  bool node_law_ok = true;
  /// "ok", "node-cap" or "error: <message>".
  std::string status = "ok";
};

struct BenchCase {
  Instance instance;
  std::string family;
};

struct BenchSuite {
  std::vector<BenchCase> cases;
  /// Any of "pack", "pierce", "ptas-pack", "ptas-pierce".
  std::vector<std::string> solvers{"pack"};
  SolveConfig exact;
  PtasConfig ptas;
  /// Constant of the node law nodes <= n^(K p^((d-1)/d)).
  double node_law_k = 1.0;
  /// Number of rows computed concurrently.
  int threads = 1;
};

inline const std::vector<std::string>& bench_columns() {
  static const std::vector<std::string> cols{"label", "n",     "d",       "family",        "solver",
                                             "value", "nodes", "depth",   "wall_ms",       "config_digest",
                                             "node_law_exponent", "node_law_ok", "status"};
  return cols;
}

/// Hex FNV-1a digest of every field that influences solver output.
std::string config_digest(const SolveConfig& cfg);
std::string config_digest(const PtasConfig& cfg);

double node_law_exponent(std::int64_t nodes, int n, int p, int d);
bool node_law_holds(std::int64_t nodes, int n, int p, int d, double k);

/// One row per (case, solver), sorted by (label, solver). Solver failures
/// are recorded in the status column.
std::vector<BenchRecord> run_bench(const BenchSuite& suite);

/// CSV with a header row. With `timing` unset the wall_ms column is 0.
std::string format_csv(const std::vector<BenchRecord>& rows, bool timing = true);

}  // namespace fatsep
