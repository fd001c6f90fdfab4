#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "fatsep/bench.hpp"
#include "fatsep/error.hpp"
#include "fatsep/generate.hpp"
#include "fatsep/instance_io.hpp"
#include "fatsep/oracle.hpp"
#include "fatsep/svg.hpp"
#include "support/checks.hpp"

using namespace fatsep;

namespace {

const std::filesystem::path kFixtures = FATSEP_FIXTURE_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("format_double round-trips") {
  for (double v : {0.0, -0.0, 1.0, 0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 1e-9}) {
    const auto s = format_double(v);
    const auto back = parse_instance("fatsep v1 d=2 n=1\nball " + s + " 0 1\n");
    CHECK(std::get<Ball>(back.objects[0].shape).center[0] == v);
  }
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("instance text round-trip") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto inst = testing::random_instance(ShapeKind::Mixed, 2 + int(seed % 3), 25, seed);
    const auto text = format_instance(inst);
    const auto back = parse_instance(text);
    REQUIRE(back == inst);
    REQUIRE(format_instance(back) == text);
  }
}

TEST_CASE("instance file round-trip") {
  const auto path = std::filesystem::temp_directory_path() / "fatsep_roundtrip.txt";
  const auto inst = testing::random_instance(ShapeKind::Box, 3, 10, 5);
  write_instance(inst, path);
  CHECK(read_instance(path) == inst);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_instance(path), Error);
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_instance("fatsep v1 d=2 n=2\nball 0 0 1\n# note\nball 0 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_instance(""), ParseError);
  CHECK_THROWS_AS(parse_instance("fatsep v2 d=2 n=0\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("fatsep v1 d=2 n=1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("fatsep v1 d=2 n=1\nsphere 0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("fatsep v1 d=2 n=1\nball 0 x 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("fatsep v1 d=2 n=1\nbox 0 0 3 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("fatsep v1 d=2 n=1\nball 0 0 -1\n"), ParseError);
}

TEST_CASE("metadata comments") {
  auto inst = parse_instance("# leading comment\nfatsep v1 d=2 n=1\n# label=demo set\n# seed=77\n\nball 1 2 3\n");
  CHECK(inst.label == "demo set");
  CHECK(inst.seed == 77);
  CHECK(inst.size() == 1);
}

TEST_CASE("fixture corpus is byte-stable") {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(kFixtures / "corpus")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  REQUIRE(files.size() == 20);
  for (const auto& f : files) {
    const auto text = slurp(f);
    const auto inst = parse_instance(text);
    CHECK_NOTHROW(inst.validate());
    CHECK(format_instance(inst) == text);
  }
}

TEST_CASE("frozen oracle values of the corpus") {
  std::istringstream values(slurp(kFixtures / "values.txt"));
  std::string name;
  int pack = 0, pierce = 0, checked = 0;
  while (values >> name >> pack >> pierce) {
    const auto inst = read_instance(kFixtures / "corpus" / name);
    CHECK(brute_pack(inst.objects).value == pack);
    if (pierce >= 0) CHECK(brute_pierce(inst.objects).value == pierce);
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("generator") {
  GenSpec g;
  g.family = Family::Grid;
  g.k = 3;
  const auto grid = gen_instance(g);
  CHECK(grid.size() == 9);
  CHECK(brute_pack(grid.objects).value == 9);

  g.per_site = 3;
  g.dim = 3;
  g.k = 2;
  g.shape = ShapeKind::Mixed;
  const auto grid3 = gen_instance(g);
  CHECK(grid3.size() == 24);
  CHECK(brute_pack(grid3.objects).value == 8);
  // pairwise intersecting boxes share a point, so each site needs one
  g.shape = ShapeKind::Box;
  const auto boxes3 = gen_instance(g);
  CHECK(greedy_pierce(boxes3.objects).value >= 8);
  CHECK(solve_pierce(boxes3).value == 8);

  g.dim = 2;
  g.k = 3;
  g.per_site = 2;
  g.shape = ShapeKind::Mixed;
  g.spacing = 1.25;
  const auto tight = gen_instance(g);
  CHECK(brute_pack(tight.objects).value == 9);
  CHECK(tight.label.find("-sp1.25-") != std::string::npos);
  g.spacing = 1.2;
  CHECK_THROWS_AS(gen_instance(g), Error);

  GenSpec empty;
  empty.n = 0;
  CHECK(gen_instance(empty).empty());

  GenSpec r;
  r.n = 18;
  r.seed = 42;
  CHECK(gen_instance(r) == gen_instance(r));
  auto other = r;
  other.seed = 43;
  CHECK_FALSE(gen_instance(r) == gen_instance(other));
  CHECK_NOTHROW(gen_instance(r).validate());

  GenSpec bad;
  bad.dim = 1;
  CHECK_THROWS_AS(gen_instance(bad), Error);
  CHECK_THROWS_AS(parse_family("hex"), Error);
  CHECK(parse_shape("disk") == ShapeKind::Ball);
}

TEST_CASE("generated random family n = 18, seed 42") {
  GenSpec r;
  r.n = 18;
  r.seed = 42;
  const auto inst = gen_instance(r);
  CHECK(brute_pack(inst.objects).value == 11);
  CHECK(solve_pack(inst).value == 11);
}

TEST_CASE("bench CSV") {
  BenchSuite empty;
  const auto header = format_csv(run_bench(empty));
  CHECK(header ==
        "label,n,d,family,solver,value,nodes,depth,wall_ms,config_digest,node_law_exponent,node_law_ok,status\n");

  BenchSuite grid;
  for (int k : {2, 3, 4, 5}) grid.cases.push_back({testing::grid_instance(k, 2, 4, 1), "grid"});
  grid.exact.clique_bound = false;
  const auto rows = run_bench(grid);
  REQUIRE(rows.size() == 4);
  const auto csv = parse_csv(format_csv(rows));
  REQUIRE(csv.size() == 5);
  CHECK(csv[0] == bench_columns());
  for (std::size_t i = 1; i < csv.size(); ++i) REQUIRE(csv[i].size() == bench_columns().size());
  // rows come sorted by label, so k ascends
  std::int64_t previous = 0;
  for (const auto& row : rows) {
    CHECK(row.status == "ok");
    CHECK(row.value == row.n / 4);
    CHECK(row.nodes >= previous);
    previous = row.nodes;
  }

  grid.threads = 4;
  CHECK(format_csv(run_bench(grid), false) == format_csv(rows, false));

  BenchSuite broken;
  broken.cases.push_back({make_instance(3, {FatObject::ball(0, {0, 0, 0}, 1)}), "ball3"});
  broken.solvers = {"pierce", "pack"};
  const auto failed = run_bench(broken);
  REQUIRE(failed.size() == 2);
  CHECK(failed[0].solver == "pack");
  CHECK(failed[0].status == "ok");
  CHECK(failed[1].status.starts_with("error"));
}

TEST_CASE("config digest tracks solver settings") {
  SolveConfig a, b;
  CHECK(config_digest(a) == config_digest(b));
  b.base_threshold = 5;
  CHECK(config_digest(a) != config_digest(b));
  CHECK(config_digest(a).size() == 16);
}

TEST_CASE("node law") {
  CHECK(node_law_holds(1, 10, 4, 2, 0.0));
  CHECK(node_law_exponent(100, 10, 4, 2) == doctest::Approx(1.0));
  CHECK(node_law_holds(100, 10, 4, 2, 1.0));
  CHECK_FALSE(node_law_holds(101, 10, 4, 2, 1.0));
}

TEST_CASE("svg rendering") {
  const auto empty = render_svg(Instance{});
  CHECK(count(empty, "<rect class=\"frame\"") == 1);
  CHECK(count(empty, "class=\"obj") == 0);

  const auto inst3 = make_instance(3, {FatObject::ball(0, {0, 0, 0}, 1)});
  CHECK_THROWS_AS(render_svg(inst3), Error);

  // two clusters, separator between them
  std::vector<FatObject> objs;
  for (int i = 0; i < 4; ++i) objs.push_back(FatObject::ball(0, {0.3 * i, 0}, 0.1));
  for (int i = 0; i < 4; ++i) objs.push_back(FatObject::box(0, {100 + 0.3 * i, 0}, {100.2 + 0.3 * i, 0.2}));
  const auto inst = make_instance(2, objs);
  const auto sep = separate(inst.objects);
  const auto svg = render_svg(inst, SvgOverlay{&sep, {}, {}});
  CHECK(count(svg, "class=\"separator\"") == 1);
  CHECK(count(svg, "class=\"obj") == 8);
  CHECK(count(svg, "class=\"obj inside") == sep.inside_ids.size());
  CHECK(count(svg, "class=\"obj outside") == sep.outside_ids.size());
  CHECK(count(svg, "class=\"obj boundary") == sep.boundary_ids.size());
  // the far cluster never meets the separator
  for (int id : sep.inside_ids) CHECK(id < 4);
  for (int id : sep.boundary_ids) CHECK(id < 4);
  CHECK(sep.outside_ids == std::vector<int>{4, 5, 6, 7});

  const auto witness = render_svg(inst, SvgOverlay{nullptr, {0, 2, 5}, {}});
  CHECK(count(witness, " witness\"") == 3);
}

TEST_CASE("svg stays small") {
  GenSpec g;
  g.n = 10000;
  g.shape = ShapeKind::Mixed;
  const auto svg = render_svg(gen_instance(g));
  CHECK(svg.size() < 2u * 1024 * 1024);
}
