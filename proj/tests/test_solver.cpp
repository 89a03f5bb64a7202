#include <doctest.h>

#include <sstream>

#include <Eigen/Dense>

#include "hwforms/cases.hpp"
#include "hwforms/errors.hpp"
#include "hwforms/solver.hpp"
#include "support.hpp"

using namespace hwforms;

TEST_CASE("linear solve: indefinite 2x2") {
  Eigen::MatrixXd A(2, 2);
  A << 0, 1, 1, 0;
  const SparseMatrix S = A.sparseView();
  const Eigen::VectorXd x = linear_solve(S, Eigen::Vector2d(1, 0));
  CHECK((x - Eigen::Vector2d(0, 1)).norm() < 1e-15);
}

TEST_CASE("linear solve: random SPD against a dense oracle") {
  Eigen::MatrixXd B = Eigen::MatrixXd::Random(50, 50);
  const Eigen::MatrixXd A = B * B.transpose() + 50.0 * Eigen::MatrixXd::Identity(50, 50);
  const Eigen::VectorXd rhs = Eigen::VectorXd::Random(50);
  const Eigen::VectorXd dense = A.ldlt().solve(rhs);
  const Eigen::VectorXd x = linear_solve(SparseMatrix(A.sparseView()), rhs);
  CHECK((x - dense).norm() <= 1e-10 * dense.norm());
  CHECK((A * x - rhs).norm() <= 1e-10 * rhs.norm());
}

TEST_CASE("linear solve: singular and non-square matrices") {
  Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(3, 3);
  Z(0, 0) = 1.0;
  CHECK_THROWS_AS(linear_solve(SparseMatrix(Z.sparseView()), Eigen::VectorXd::Ones(3)), LinearSolveFailure);
  SparseMatrix rect(3, 2);
  LinearSolver s;
  CHECK_THROWS_AS(s.factorize(rect), LinearSolveFailure);
}

TEST_CASE("linear solver reuses its analysis across factorizations") {
  Eigen::MatrixXd A = Eigen::MatrixXd::Random(20, 20) + 20 * Eigen::MatrixXd::Identity(20, 20);
  LinearSolver s;
  s.factorize(SparseMatrix(A.sparseView()));
  const Eigen::VectorXd b = Eigen::VectorXd::Random(20);
  CHECK((A * s.solve(b) - b).norm() < 1e-12);
  A *= 2.0;
  s.factorize(SparseMatrix(A.sparseView()));
  CHECK((A * s.solve(b) - b).norm() < 1e-12);
}

TEST_CASE("solver config validation") {
  SolverConfig c;
  CHECK_NOTHROW(c.validate());
  c.load_steps = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.newton_tol = 0.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.max_newton_iters = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.threads = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("unloaded problem converges immediately") {
  const auto m = hwtest::distorted_square(3, 0.3);
  const auto L = build_layout(m);
  const Assembler a(m, L, {1.0, 10.0});
  BoundaryConditions bcs;
  for (int v : m.vertices_with_marker(1)) bcs.dirichlet.push_back({L.offset(Block::Phi1) + v, m.vertices[v].x()});
  SolverConfig cfg;
  cfg.load_steps = 2;
  const auto id = identity_state(m, L);
  const auto res = solve(a, bcs, cfg, id);
  CHECK(res.report.steps.size() == 2);
  for (const auto& st : res.report.steps) CHECK(st.iterations == 0);
  CHECK(res.state.values() == id.values());
}

namespace {

BenchmarkConfig coarse_cook() {
  auto cfg = BenchmarkConfig::defaults(CaseKind::Cook);
  cfg.refine = 0;
  return cfg;
}

}  // namespace

TEST_CASE("Cook coarse: converged steps, quadratic tail, report") {
  const auto cfg = coarse_cook();
  const auto prob = make_problem(cfg);
  const Assembler a(prob->mesh, prob->layout, cfg.material);
  const auto res = solve(a, prob->bcs, cfg.solver, identity_state(prob->mesh, prob->layout));
  const auto& rep = res.report;
  REQUIRE(rep.steps.size() == 8);
  for (const auto& st : rep.steps) CHECK(st.residual_norm < rep.tolerance);
  CHECK(rep.steps.back().load_factor == 1.0);

  const auto h = rep.residual_history(8);
  REQUIRE(h.size() >= 3);
  const double r0 = h[h.size() - 3], r1 = h[h.size() - 2], r2 = h.back();
  MESSAGE("last residuals " << r0 << " " << r1 << " " << r2);
  CHECK(r2 / r1 < 1e-4);
  CHECK(r2 / (r1 * r1) < 1e3);

  // reported energy is the assembled functional at the returned state
  const auto sys = a.assemble(res.state, prob->bcs, {1.0, false, 1});
  CHECK(std::abs(rep.steps.back().energy - sys.value) <= 1e-12 * std::max(1.0, std::abs(sys.value)));
  CHECK(a.min_jacobian(res.state) > 0.0);
  for (const auto& it : rep.iterations) CHECK(std::isfinite(it.residual_norm));

  std::ostringstream os;
  write_report_csv(os, rep);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "step,iter,residual_norm,step_length,energy");
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 4);
  }
  CHECK(rows == rep.iterations.size());

  // Halving the load increment leaves the converged state unchanged.
  auto fine = cfg.solver;
  fine.load_steps = 16;
  const auto res16 = solve(a, prob->bcs, fine, identity_state(prob->mesh, prob->layout));
  const Eigen::VectorXd dphi = (res16.state.values() - res.state.values()).tail(2 * prob->mesh.num_vertices());
  MESSAGE("8 vs 16 steps: max phi difference " << dphi.cwiseAbs().maxCoeff());
  CHECK(dphi.cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("solver errors") {
  const auto cfg = coarse_cook();
  const auto prob = make_problem(cfg);
  const Assembler a(prob->mesh, prob->layout, cfg.material);
  SolverConfig tight = cfg.solver;
  tight.max_newton_iters = 1;
  CHECK_THROWS_AS(solve(a, prob->bcs, tight, identity_state(prob->mesh, prob->layout)), NoConvergence);

  auto bad = identity_state(prob->mesh, prob->layout);
  bad.block(Block::Theta1) *= -1.0;
  CHECK_THROWS_AS(solve(a, prob->bcs, cfg.solver, bad), LineSearchExhausted);
  CHECK_THROWS_AS(solve(a, prob->bcs, cfg.solver, MixedState{}), Error);
}
