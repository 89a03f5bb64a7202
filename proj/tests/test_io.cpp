#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "hwforms/bc_io.hpp"
#include "hwforms/config.hpp"
#include "hwforms/driver.hpp"
#include "hwforms/errors.hpp"
#include "hwforms/mesh_io.hpp"
#include "hwforms/metrics.hpp"
#include "hwforms/vtk.hpp"
#include "support.hpp"

using namespace hwforms;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("hwforms_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("affine expressions") {
  auto same = [](AffineExpr e, double a, double b, double c) { return e.a == a && e.b == b && e.c == c; };
  CHECK(same(parse_affine("0"), 0, 0, 0));
  CHECK(same(parse_affine("0.2*x - 0.1*y + 3"), 3, 0.2, -0.1));
  CHECK(same(parse_affine("1e-3x"), 0, 1e-3, 0));
  CHECK(same(parse_affine("-y"), 0, 0, -1));
  CHECK(same(parse_affine(" 2 + x + x "), 2, 2, 0));
  CHECK(parse_affine("1+2*x+3*y")(Vec2(1, 1)) == 6.0);
  CHECK_THROWS_AS(parse_affine(""), ConfigError);
  CHECK_THROWS_AS(parse_affine("x*y"), ConfigError);
  CHECK_THROWS_AS(parse_affine("2 3"), ConfigError);
  CHECK_THROWS_AS(parse_affine("*x"), ConfigError);
  CHECK_THROWS_AS(parse_affine("z"), ConfigError);
}

TEST_CASE("bc files") {
  std::istringstream is(
      "# comment\n"
      "dirichlet 1 both 0\n"
      "dirichlet 2 ux 0.5*x  # trailing\n"
      "\n"
      "neumann 3 0 -2.5\n");
  const auto spec = read_bc(is);
  REQUIRE(spec.dirichlet.size() == 2);
  REQUIRE(spec.neumann.size() == 1);
  CHECK(spec.dirichlet[1].marker == 2);
  CHECK(spec.dirichlet[1].component == Component::X);
  CHECK(spec.dirichlet[1].displacement.b == 0.5);
  CHECK(spec.neumann[0].traction == Vec2(0, -2.5));

  std::ostringstream os;
  write_bc(os, spec);
  std::istringstream back(os.str());
  const auto again = read_bc(back);
  CHECK(again.dirichlet.size() == 2);
  CHECK(again.neumann[0].traction == spec.neumann[0].traction);

  std::istringstream bad1("dirichlet 1 uz 0\n"), bad2("force 1 2 3\n"), bad3("neumann 1 2\n");
  CHECK_THROWS_AS(read_bc(bad1), Error);
  CHECK_THROWS_AS(read_bc(bad2), Error);
  CHECK_THROWS_AS(read_bc(bad3), Error);
  CHECK_THROWS_AS(read_bc(std::string("/nonexistent/file.bc")), IoError);
}

TEST_CASE("resolving marker-based boundary data") {
  const auto m = hwtest::distorted_square(2, 0.0);
  const auto L = build_layout(m);
  BoundarySpec spec;
  spec.dirichlet.push_back({1, Component::Y, parse_affine("0.5*x")});
  spec.neumann.push_back({1, Vec2(1, 0)});
  const auto bcs = resolve(spec, m, L);
  CHECK(bcs.dirichlet.size() == m.vertices_with_marker(1).size());
  CHECK(bcs.neumann.size() == m.boundary_edges.size());
  for (const auto& d : bcs.dirichlet) {
    const int v = d.dof - L.offset(Block::Phi2);
    REQUIRE(v >= 0);
    CHECK(d.value == doctest::Approx(m.vertices[v].y() + 0.5 * m.vertices[v].x()));
  }
  BoundarySpec missing;
  missing.neumann.push_back({9, Vec2(1, 0)});
  CHECK_THROWS_AS(resolve(missing, m, L), ConfigError);
}

TEST_CASE("config files") {
  std::istringstream is("# cook run\ncase = cook\nrefine=2\n mu = 2.5\nsteps=4\npattern=diagonal\n");
  const auto kv = read_key_values(is);
  CHECK(kv.at("case") == "cook");
  CHECK(kv.at("mu") == "2.5");
  auto cfg = BenchmarkConfig::defaults(parse_case(kv.at("case")));
  CHECK(cfg.material.mu == 80.194);
  CHECK(cfg.material.kappa == 400889.8);
  CHECK(cfg.load == 32.0);
  CHECK(cfg.solver.load_steps == 8);
  apply_key_values(cfg, kv);
  CHECK(cfg.refine == 2);
  CHECK(cfg.material.mu == 2.5);
  CHECK(cfg.solver.load_steps == 4);
  CHECK(cfg.cook.pattern == MeshPattern::Diagonal);

  std::ostringstream os;
  write_config(os, cfg);
  std::istringstream back(os.str());
  auto again = BenchmarkConfig::defaults(CaseKind::Cook);
  apply_key_values(again, read_key_values(back));
  CHECK(again.material.mu == cfg.material.mu);
  CHECK(again.refine == cfg.refine);
  CHECK(os.str().find("# assumption") != std::string::npos);

  const auto plate = BenchmarkConfig::defaults(CaseKind::Plate);
  CHECK(plate.material.mu == 10.0);
  CHECK(plate.material.kappa == 1000.0);
  CHECK(plate.load == 1.0);
  CHECK(plate.solver.load_steps == 10);

  CHECK_THROWS_AS(apply_key_values(cfg, {{"colour", "red"}}), ConfigError);
  CHECK_THROWS_AS(apply_key_values(cfg, {{"mu", "abc"}}), ConfigError);
  CHECK_THROWS_AS(apply_key_values(cfg, {{"refine", "1.5"}}), ConfigError);
  CHECK_THROWS_AS(parse_case("beam"), ConfigError);
  std::istringstream noeq("refine 2\n");
  CHECK_THROWS_AS(read_key_values(noeq), ConfigError);
  auto file = BenchmarkConfig::defaults(CaseKind::File);
  CHECK_THROWS_AS(file.validate(), ConfigError);
}

TEST_CASE("vtk output") {
  const auto m = hwtest::distorted_square(2, 0.3);
  const auto L = build_layout(m);
  std::ostringstream os;
  write_vtk(os, m, L, identity_state(m, L));
  const std::string s = os.str();
  CHECK(s.rfind("# vtk DataFile Version 3.0\n", 0) == 0);
  CHECK(s.find("DATASET UNSTRUCTURED_GRID") != std::string::npos);
  CHECK(s.find("VECTORS displacement") != std::string::npos);
  CHECK(s.find("SCALARS piola_norm") != std::string::npos);
  CHECK(s.find("SCALARS J") != std::string::npos);
  CHECK(s.find("SCALARS compat_residual") != std::string::npos);
  // identity: points are the reference coordinates
  std::istringstream is(s);
  std::string tok;
  while (is >> tok && tok != "POINTS") {}
  std::size_t n;
  is >> n >> tok;
  REQUIRE(n == m.num_vertices());
  for (std::size_t i = 0; i < n; ++i) {
    double x, y, z;
    is >> x >> y >> z;
    CHECK(x == m.vertices[i].x());
    CHECK(y == m.vertices[i].y());
    CHECK(z == 0.0);
  }
}

TEST_CASE("extrapolation and tabulation") {
  // q_l = 1 + 2^{-2l}: second order, limit 1
  const auto e = extrapolate({2.0, 1.25, 1.0625});
  CHECK(e.richardson);
  CHECK(e.observed_order == doctest::Approx(2.0));
  CHECK(e.reference == doctest::Approx(1.0));
  const auto osc = extrapolate({1.0, 2.0, 1.5});
  CHECK(!osc.richardson);
  CHECK(osc.reference == 1.5);
  CHECK(extrapolate({3.0, 4.0}).reference == 4.0);
  CHECK_THROWS_AS(extrapolate({}), ConfigError);

  std::vector<RunMetrics> runs(2);
  runs[0].theta_integral = 2.0;
  runs[1].theta_integral = 2.5;
  runs[0].refine = 0;
  runs[1].refine = 1;
  const auto study = tabulate(runs);
  const auto& q = study.quantity("theta_integral");
  CHECK(q.reference.reference == 2.5);
  CHECK(q.relative_error[0] == doctest::Approx(0.2));
  CHECK(q.relative_error[1] == 0.0);
  CHECK(std::isnan(q.relative_change[0]));
  CHECK(q.relative_change[1] == doctest::Approx(0.2));
  CHECK_THROWS_AS(study.quantity("nope"), ConfigError);
}

TEST_CASE("run_benchmark writes artifacts and is deterministic") {
  auto cfg = BenchmarkConfig::defaults(CaseKind::Cook);
  const fs::path first = scratch("det_a");
  cfg.out = first.string();
  const auto a = run_benchmark(cfg);
  cfg.out = scratch("det_b").string();
  run_benchmark(cfg);
  for (const char* f : {"metrics.csv", "report.csv", "solution.vtk"}) {
    const auto x = slurp(first / f);
    CHECK(!x.empty());
    CHECK(x == slurp(fs::path(cfg.out) / f));
  }
  CHECK(fs::exists(fs::path(cfg.out) / "config.txt"));

  const auto metrics = slurp(fs::path(cfg.out) / "metrics.csv");
  std::istringstream is(metrics);
  std::string header, row;
  std::getline(is, header);
  std::getline(is, row);
  CHECK(header.find("probe_ux") != std::string::npos);
  CHECK(header.find("piola_integral") != std::string::npos);
  CHECK(header.find("dofs") != std::string::npos);
  // every floating-point field carries at least 12 significant digits
  const std::regex number(R"(-?\d\.(\d+)e[+-]\d+)");
  int fields = 0;
  for (auto it = std::sregex_iterator(row.begin(), row.end(), number); it != std::sregex_iterator(); ++it) {
    CHECK((*it)[1].length() >= 11);
    ++fields;
  }
  CHECK(fields >= 8);
  CHECK(a.metrics.dofs == a.problem->layout.total);
  CHECK(a.metrics.probe_displacement.y() > 5.0);
}

TEST_CASE("case=file reproduces the patch test end to end") {
  const fs::path dir = scratch("file_case");
  {
    std::ofstream mesh(dir / "square.m2d");
    mesh << "m2d 1\n4 2\n0 0\n1 0\n1 1\n0 1\n0 1 2\n0 2 3\n"
            "em 0 1 1\nem 1 2 1\nem 2 3 1\nem 0 3 1\n";
    std::ofstream bc(dir / "affine.bc");
    bc << "dirichlet 1 ux 0.2*x + 0.1*y\n"
          "dirichlet 1 uy -0.1*y\n";
  }
  auto cfg = BenchmarkConfig::defaults(CaseKind::File);
  cfg.mesh_path = (dir / "square.m2d").string();
  cfg.bc_path = (dir / "affine.bc").string();
  cfg.out = (dir / "out").string();
  const auto out = run_benchmark(cfg);
  CHECK(out.metrics.final_residual < 1e-10);
  const auto& mesh = out.problem->mesh;
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto f = evaluate_fields(element_geometry(mesh, t), gather(out.problem->layout, out.state, t),
                                   Barycentric::Constant(1.0 / 3));
    CHECK((f.theta1 - Vec2(1.2, 0.1)).norm() < 1e-10);
    CHECK((f.theta2 - Vec2(0.0, 0.9)).norm() < 1e-10);
  }
  CHECK(fs::exists(dir / "out" / "solution.vtk"));
}

TEST_CASE("convergence study over two levels uses the finest level as reference") {
  auto cfg = BenchmarkConfig::defaults(CaseKind::Plate);
  cfg.out = scratch("conv").string();
  const auto study = convergence_study(cfg, {0, 1});
  REQUIRE(study.runs.size() == 2);
  for (const auto& q : study.quantities) {
    CHECK(!q.reference.richardson);
    CHECK(q.reference.reference == q.values.back());
    CHECK(q.relative_error.back() == 0.0);
  }
  CHECK(fs::exists(fs::path(cfg.out) / "convergence.csv"));
  CHECK(fs::exists(fs::path(cfg.out) / "level_1" / "metrics.csv"));
  std::istringstream m(slurp(fs::path(cfg.out) / "metrics.csv"));
  std::string line;
  int rows = -1;
  while (std::getline(m, line)) ++rows;
  CHECK(rows == 2);
  CHECK_THROWS_AS(convergence_study(cfg, {1}, false), ConfigError);
}

TEST_CASE("benchmark problems") {
  auto cfg = BenchmarkConfig::defaults(CaseKind::Cook);
  const auto p = make_problem(cfg);
  CHECK((p->mesh.vertices[p->probe_vertex] - Vec2(48, 60)).norm() < 1e-12);
  CHECK(nearest_vertex(p->mesh, Vec2(48.1, 59.9)) == p->probe_vertex);
  CHECK(!p->bcs.dirichlet.empty());
  CHECK(!p->bcs.neumann.empty());
  auto block = BenchmarkConfig::defaults(CaseKind::Block);
  CHECK((make_problem(block)->probe - Vec2(0, 10)).norm() == 0.0);
  auto plate = BenchmarkConfig::defaults(CaseKind::Plate);
  CHECK(make_problem(plate)->bcs.neumann.empty());
}
