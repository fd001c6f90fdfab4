#include "fatsep/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fatsep/bench.hpp"
#include "fatsep/error.hpp"
#include "fatsep/exact_solver.hpp"
#include "fatsep/generate.hpp"
#include "fatsep/instance_io.hpp"
#include "fatsep/oracle.hpp"
#include "fatsep/ptas.hpp"
#include "fatsep/records.hpp"
#include "fatsep/svg.hpp"

namespace fatsep::cli {

namespace {

struct Shared {
  std::string in;
  std::string out;
  std::string svg;
  std::uint64_t seed = 1;
  std::optional<double> epsilon;
  int dim = 2;
  int base_threshold = SolveConfig{}.base_threshold;
  std::int64_t node_cap = SolveConfig{}.node_cap;
  bool parallel = false;
  bool timing = false;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--in", s.in, "Instance file");
  cmd->add_option("--out", s.out, "Output file (default: standard output)");
  cmd->add_option("--svg", s.svg, "Also render a planar SVG");
  cmd->add_option("--seed", s.seed, "Random seed");
  cmd->add_option("--epsilon", s.epsilon, "Accuracy / splitting parameter");
  cmd->add_option("--dim", s.dim, "Dimension");
  cmd->add_option("--base-threshold", s.base_threshold, "Measure at which the exact recursion stops splitting");
  cmd->add_option("--node-cap", s.node_cap, "Search node limit");
  cmd->add_flag("--parallel", s.parallel, "Solve independent subproblems concurrently");
  cmd->add_flag("--timing", s.timing, "Include wall-clock times in the output");
}

SolveConfig solve_config(const Shared& s) {
  SolveConfig cfg;
  cfg.base_threshold = s.base_threshold;
  cfg.node_cap = s.node_cap;
  cfg.parallel_branches = s.parallel;
  if (s.epsilon) cfg.separator.epsilon = *s.epsilon;
  cfg.validate();
  return cfg;
}

PtasConfig ptas_config(const Shared& s) {
  PtasConfig cfg;
  cfg.exact = SolveConfig{};
  cfg.exact.base_threshold = s.base_threshold;
  cfg.exact.node_cap = s.node_cap;
  cfg.exact.parallel_branches = s.parallel;
  if (s.epsilon) cfg.epsilon = *s.epsilon;
  cfg.validate();
  return cfg;
}

Instance load(const Shared& s) {
  if (s.in.empty()) throw Error("--in is required");
  auto inst = read_instance(s.in);
  inst.validate();
  return inst;
}

void emit(const Shared& s, std::ostream& out, const std::string& text) {
  if (s.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(s.out, std::ios::binary);
  if (!f) throw Error("cannot write " + s.out);
  f << text;
}

void maybe_svg(const Shared& s, const Instance& inst, const SvgOverlay& overlay) {
  if (!s.svg.empty()) render_svg(inst, overlay, s.svg);
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separators, exact and approximate packing and piercing for fat objects", "fatsep"};
  app.require_subcommand(1);
  Shared s;

  GenSpec gen;
  std::string family = "random", shape = "ball";
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  add_shared(gen_cmd, s);
  gen_cmd->add_option("--family", family, "random | clusters | grid");
  gen_cmd->add_option("--shape", shape, "ball | box | mixed");
  gen_cmd->add_option("--n", gen.n, "Number of objects (random, clusters)");
  gen_cmd->add_option("--density", gen.density, "Objects per unit volume (random)");
  gen_cmd->add_option("--clusters", gen.clusters, "Number of clusters");
  gen_cmd->add_option("--k", gen.k, "Grid sites per axis");
  gen_cmd->add_option("--per-site", gen.per_site, "Objects per grid site");
  gen_cmd->add_option("--spacing", gen.spacing, "Distance between grid sites");
  gen_cmd->add_option("--min-size", gen.min_size, "Smallest object size (random, clusters)");
  gen_cmd->add_option("--max-size", gen.max_size, "Largest object size (random, clusters)");

  auto* pack_cmd = app.add_subcommand("pack", "Exact packing number");
  add_shared(pack_cmd, s);
  auto* pierce_cmd = app.add_subcommand("pierce", "Exact piercing number");
  add_shared(pierce_cmd, s);
  auto* ptas_pack_cmd = app.add_subcommand("ptas-pack", "Approximate packing");
  add_shared(ptas_pack_cmd, s);
  auto* ptas_pierce_cmd = app.add_subcommand("ptas-pierce", "Approximate piercing");
  add_shared(ptas_pierce_cmd, s);
  auto* sep_cmd = app.add_subcommand("separator", "Box separator of an instance");
  add_shared(sep_cmd, s);

  std::string problem = "pack";
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference values");
  add_shared(oracle_cmd, s);
  oracle_cmd->add_option("--problem", problem, "pack | pierce | fine-grid");

  std::vector<std::string> bench_inputs, solvers{"pack"};
  std::string ks;
  double node_law_k = 1.0;
  int threads = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark suite to CSV");
  add_shared(bench_cmd, s);
  bench_cmd->add_option("--instance", bench_inputs, "Instance files to include");
  bench_cmd->add_option("--family", family, "Generated family: random | clusters | grid");
  bench_cmd->add_option("--shape", shape, "ball | box | mixed");
  bench_cmd->add_option("--grid-k", ks, "Comma-separated grid sizes k (grid family)");
  bench_cmd->add_option("--n", gen.n, "Number of objects (random, clusters)");
  bench_cmd->add_option("--per-site", gen.per_site, "Objects per grid site");
  bench_cmd->add_option("--spacing", gen.spacing, "Distance between grid sites");
  bench_cmd->add_option("--solver", solvers, "pack | pierce | ptas-pack | ptas-pierce (repeatable)");
  bench_cmd->add_option("--node-law-k", node_law_k, "Constant K of the node law");
  bench_cmd->add_option("--threads", threads, "Rows computed concurrently");

  std::string witness;
  auto* render_cmd = app.add_subcommand("render", "Render a planar instance to SVG");
  add_shared(render_cmd, s);
  render_cmd->add_option("--overlay", witness, "none | separator | pack | pierce")->default_val("none");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*gen_cmd) {
      gen.family = parse_family(family);
      gen.shape = parse_shape(shape);
      gen.dim = s.dim;
      gen.seed = s.seed;
      const auto inst = gen_instance(gen);
      emit(s, out, format_instance(inst));
      maybe_svg(s, inst, {});
      return kOk;
    }
    if (*pack_cmd) {
      const auto inst = load(s);
      const auto sol = solve_pack(inst, solve_config(s));
      emit(s, out, format_record(sol, s.timing));
      maybe_svg(s, inst, SvgOverlay{nullptr, sol.witness, {}});
      return sol.stats.optimal ? kOk : kNodeCap;
    }
    if (*pierce_cmd) {
      const auto inst = load(s);
      const auto sol = solve_pierce(inst, solve_config(s));
      emit(s, out, format_record(sol, s.timing));
      maybe_svg(s, inst, SvgOverlay{nullptr, {}, sol.witness});
      return sol.stats.optimal ? kOk : kNodeCap;
    }
    if (*ptas_pack_cmd) {
      const auto inst = load(s);
      const auto r = ptas_pack(inst, ptas_config(s));
      emit(s, out, format_record(r, s.timing));
      maybe_svg(s, inst, SvgOverlay{nullptr, r.solution.witness, {}});
      return r.solution.stats.optimal ? kOk : kNodeCap;
    }
    if (*ptas_pierce_cmd) {
      const auto inst = load(s);
      const auto r = ptas_pierce(inst, ptas_config(s));
      emit(s, out, format_record(r, s.timing));
      maybe_svg(s, inst, SvgOverlay{nullptr, {}, r.solution.witness});
      return r.solution.stats.optimal ? kOk : kNodeCap;
    }
    if (*sep_cmd) {
      const auto inst = load(s);
      SeparatorConfig cfg;
      if (s.epsilon) cfg.epsilon = *s.epsilon;
      cfg.validate();
      const auto sep = separate(inst.objects, cfg);
      emit(s, out, format_record(sep));
      maybe_svg(s, inst, SvgOverlay{&sep, {}, {}});
      return kOk;
    }
    if (*oracle_cmd) {
      const auto inst = load(s);
      if (problem == "pack") {
        emit(s, out, format_record(brute_pack(inst.objects), true));
      } else if (problem == "pierce") {
        emit(s, out, format_record(brute_pierce(inst.objects), false));
      } else if (problem == "fine-grid") {
        emit(s, out, format_record(fine_grid_pierce(inst.objects), false));
      } else {
        throw Error("unknown oracle problem '" + problem + "'");
      }
      return kOk;
    }
    if (*bench_cmd) {
      BenchSuite suite;
      suite.exact = solve_config(s);
      suite.ptas = ptas_config(s);
      suite.solvers = solvers;
      suite.node_law_k = node_law_k;
      suite.threads = threads;
      for (const auto& path : bench_inputs) {
        auto inst = read_instance(path);
        inst.validate();
        if (inst.label.empty()) inst.label = path;
        suite.cases.push_back({std::move(inst), "file"});
      }
      if (bench_cmd->count("--family") > 0) {
        gen.family = parse_family(family);
        gen.shape = parse_shape(shape);
        gen.dim = s.dim;
        gen.seed = s.seed;
        if (gen.family == Family::Grid) {
          for (int k : split_ints(ks)) {
            gen.k = k;
            suite.cases.push_back({gen_instance(gen), family});
          }
        } else {
          suite.cases.push_back({gen_instance(gen), family});
        }
      }
      const auto rows = run_bench(suite);
      emit(s, out, format_csv(rows, s.timing));
      const bool aborted = std::any_of(rows.begin(), rows.end(), [](const BenchRecord& r) { return r.status != "ok"; });
      return aborted ? kNodeCap : kOk;
    }
    if (*render_cmd) {
      const auto inst = load(s);
      std::optional<SeparatorResult> sep;
      SvgOverlay overlay;
      if (witness == "separator") {
        sep = separate(inst.objects);
        overlay.separator = &*sep;
      } else if (witness == "pack") {
        overlay.witness_ids = solve_pack(inst, solve_config(s)).witness;
      } else if (witness == "pierce") {
        overlay.points = solve_pierce(inst, solve_config(s)).witness;
      } else if (witness != "none") {
        throw Error("unknown overlay '" + witness + "'");
      }
      const auto text = render_svg(inst, overlay);
      if (!s.svg.empty()) {
        render_svg(inst, overlay, s.svg);
      } else {
        emit(s, out, text);
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace fatsep::cli
