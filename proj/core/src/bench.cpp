#include "fatsep/bench.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "fatsep/error.hpp"
#include "fatsep/instance_io.hpp"

namespace fatsep {

namespace {

class Fnv {
 public:
  Fnv& add(const std::string& s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001b3ULL;
    }
    h_ ^= 0xff;
    h_ *= 0x100000001b3ULL;
    return *this;
  }
  Fnv& add(double v) { return add(format_double(v)); }
  Fnv& add(std::int64_t v) { return add(std::to_string(v)); }

  std::string hex() const {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h_;
    return os.str();
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

void add_exact(Fnv& f, const SolveConfig& cfg) {
  f.add(std::int64_t{cfg.base_threshold})
      .add(cfg.separator.epsilon)
      .add(cfg.separator.balance_cap)
      .add(std::int64_t{cfg.separator.shell_samples_cap})
      .add(cfg.separator.side_search_ratio)
      .add(cfg.node_cap)
      .add(std::int64_t{cfg.clique_bound});
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

BenchRecord run_row(const BenchSuite& suite, const BenchCase& c, const std::string& solver) {
  BenchRecord row;
  row.label = c.instance.label;
  row.n = static_cast<int>(c.instance.size());
  row.d = c.instance.dim;
  row.family = c.family;
  row.solver = solver;
  const bool ptas = solver.starts_with("ptas-");
  row.config_digest = ptas ? config_digest(suite.ptas) : config_digest(suite.exact);
  SearchStats stats;
  try {
    if (solver == "pack") {
      auto s = solve_pack(c.instance, suite.exact);
      row.value = s.value;
      stats = s.stats;
    } else if (solver == "pierce") {
      auto s = solve_pierce(c.instance, suite.exact);
      row.value = s.value;
      stats = s.stats;
    } else if (solver == "ptas-pack") {
      auto s = ptas_pack(c.instance, suite.ptas);
      row.value = s.solution.value;
      stats = s.solution.stats;
    } else if (solver == "ptas-pierce") {
      auto s = ptas_pierce(c.instance, suite.ptas);
      row.value = s.solution.value;
      stats = s.solution.stats;
    } else {
      throw Error("unknown solver '" + solver + "'");
    }
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
    row.node_law_ok = false;
    return row;
  }
  row.nodes = stats.nodes;
  row.depth = stats.depth;
  row.wall_ms = stats.wall_time.count() * 1e3;
  if (!stats.optimal) row.status = "node-cap";
  row.node_law_exponent = node_law_exponent(row.nodes, row.n, row.value, row.d);
  row.node_law_ok = node_law_holds(row.nodes, row.n, row.value, row.d, suite.node_law_k);
  return row;
}

}  // namespace

std::string config_digest(const SolveConfig& cfg) {
  Fnv f;
  f.add(std::string("exact"));
  add_exact(f, cfg);
  return f.hex();
}

std::string config_digest(const PtasConfig& cfg) {
  Fnv f;
  f.add(std::string("ptas")).add(cfg.epsilon).add(cfg.c_stop);
  add_exact(f, cfg.exact);
  return f.hex();
}

double node_law_exponent(std::int64_t nodes, int n, int p, int d) {
  if (n < 2 || p < 1 || nodes < 1) return 0.0;
  const double scale = std::pow(static_cast<double>(p), (d - 1.0) / d);
  return std::log(static_cast<double>(nodes)) / (scale * std::log(static_cast<double>(n)));
}

bool node_law_holds(std::int64_t nodes, int n, int p, int d, double k) {
  if (nodes <= 1) return true;
  if (n < 2 || p < 1) return false;
  return node_law_exponent(nodes, n, p, d) <= k;
}

std::vector<BenchRecord> run_bench(const BenchSuite& suite) {
  std::vector<std::pair<const BenchCase*, const std::string*>> jobs;
  for (const auto& c : suite.cases) {
    for (const auto& s : suite.solvers) jobs.emplace_back(&c, &s);
  }
  std::vector<BenchRecord> rows(jobs.size());
  const std::size_t width = static_cast<std::size_t>(std::max(1, suite.threads));
  for (std::size_t start = 0; start < jobs.size(); start += width) {
    const std::size_t stop = std::min(jobs.size(), start + width);
    std::vector<std::future<BenchRecord>> running;
    for (std::size_t j = start; j < stop; ++j) {
      running.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred,
                                   [&, j] { return run_row(suite, *jobs[j].first, *jobs[j].second); }));
    }
    for (std::size_t j = start; j < stop; ++j) rows[j] = running[j - start].get();
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::tie(a.label, a.solver) < std::tie(b.label, b.solver);
  });
  return rows;
}

std::string format_csv(const std::vector<BenchRecord>& rows, bool timing) {
  std::ostringstream os;
  const auto& cols = bench_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& r : rows) {
    os << csv_field(r.label) << ',' << r.n << ',' << r.d << ',' << csv_field(r.family) << ',' << csv_field(r.solver)
       << ',' << r.value << ',' << r.nodes << ',' << r.depth << ',' << (timing ? format_double(r.wall_ms) : "0")
       << ',' << r.config_digest << ',' << format_double(r.node_law_exponent) << ',' << (r.node_law_ok ? 1 : 0)
       << ',' << csv_field(r.status) << '\n';
  }
  return os.str();
}

}  // namespace fatsep
