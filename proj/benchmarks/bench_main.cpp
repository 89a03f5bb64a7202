#include <benchmark/benchmark.h>

#include "hwforms/driver.hpp"
#include "hwforms/element.hpp"

using namespace hwforms;

namespace {

ElementGeometry sample_geometry() {
  const std::array<Vec2, 3> p{Vec2(0.1, 0.0), Vec2(1.2, 0.3), Vec2(0.4, 0.9)};
  return element_geometry(std::span<const Vec2, 3>(p));
}

LocalVector sample_state(const ElementGeometry& g) {
  Mat2 F;
  F << 1.1, 0.05, -0.02, 0.95;
  LocalVector s = LocalVector::Zero();
  for (int c = 0; c < 2; ++c) {
    for (int a = 0; a < 3; ++a) s[local::kPhi1 + 3 * c + a] = F.row(c).dot(g.vertex_coords[a]);
    for (int k = 0; k < 6; ++k) {
      const auto [i, j] = kP1Lambda1Pairs[k];
      s[6 * c + k] = F.row(c).dot(g.vertex_coords[j] - g.vertex_coords[i]);
    }
  }
  for (int k = 0; k < 6; ++k) s[local::kT1 + k] = 0.1 * (k + 1);
  return s;
}

void BM_ElementTangent(benchmark::State& st) {
  const auto g = sample_geometry();
  const auto s = sample_state(g);
  const auto& q = quadrature(kDefaultQuadratureDegree);
  for (auto _ : st) benchmark::DoNotOptimize(element_evaluate(g, s, {80.194, 400889.8}, q, ElementOutput::Tangent));
}
BENCHMARK(BM_ElementTangent);

void BM_ElementResidual(benchmark::State& st) {
  const auto g = sample_geometry();
  const auto s = sample_state(g);
  const auto& q = quadrature(kDefaultQuadratureDegree);
  for (auto _ : st) benchmark::DoNotOptimize(element_evaluate(g, s, {80.194, 400889.8}, q, ElementOutput::Residual));
}
BENCHMARK(BM_ElementResidual);

void BM_AssembleCook(benchmark::State& st) {
  auto cfg = BenchmarkConfig::defaults(CaseKind::Cook);
  cfg.refine = static_cast<int>(st.range(0));
  const auto p = make_problem(cfg);
  const Assembler a(p->mesh, p->layout, cfg.material);
  const auto x = identity_state(p->mesh, p->layout);
  for (auto _ : st) benchmark::DoNotOptimize(a.assemble(x, p->bcs));
  st.counters["dofs"] = p->layout.total;
}
BENCHMARK(BM_AssembleCook)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_LinearSolveCook(benchmark::State& st) {
  auto cfg = BenchmarkConfig::defaults(CaseKind::Cook);
  cfg.refine = static_cast<int>(st.range(0));
  const auto p = make_problem(cfg);
  const Assembler a(p->mesh, p->layout, cfg.material);
  const auto sys = a.assemble(identity_state(p->mesh, p->layout), p->bcs);
  const DirichletReduction red(p->layout.total, p->bcs);
  const SparseMatrix K = red.restrict(sys.tangent);
  const Eigen::VectorXd r = red.restrict(sys.residual) + Eigen::VectorXd::Ones(K.rows());
  for (auto _ : st) benchmark::DoNotOptimize(linear_solve(K, r));
  st.counters["dofs"] = static_cast<double>(K.rows());
}
BENCHMARK(BM_LinearSolveCook)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SolveCook(benchmark::State& st) {
  auto cfg = BenchmarkConfig::defaults(CaseKind::Cook);
  cfg.refine = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(run(cfg).metrics);
}
BENCHMARK(BM_SolveCook)->DenseRange(0, 1)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
