#include "hwforms/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

#include "hwforms/errors.hpp"
#include "hwforms/metrics.hpp"
#include "hwforms/vtk.hpp"

namespace hwforms {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream os(p);
  if (!os) throw IoError("cannot open " + p.string());
  return os;
}

}  // namespace

RunMetrics measure(const Problem& problem, const MixedState& state, const SolveReport& report,
                   const BenchmarkConfig& cfg) {
  RunMetrics m;
  m.kind = cfg.kind;
  m.refine = cfg.refine;
  m.dofs = problem.layout.total;
  m.triangles = static_cast<int>(problem.mesh.num_triangles());
  m.probe = problem.probe;
  m.probe_displacement = displacement(problem.mesh, state, problem.probe_vertex);
  const auto integrals = field_integrals(problem.mesh, problem.layout, state, cfg.quadrature_degree);
  m.theta_integral = integrals.theta_norm;
  m.piola_integral = integrals.piola_norm;
  m.min_jacobian = integrals.min_jacobian;
  m.max_jacobian = integrals.max_jacobian;
  for (const auto& c : compatibility_residual(problem.mesh, problem.layout, state, cfg.quadrature_degree)) {
    m.max_theta_minus_dphi = std::max(m.max_theta_minus_dphi, c.theta_minus_dphi);
    m.max_dtheta = std::max(m.max_dtheta, c.dtheta);
  }
  m.newton_iterations = 0;
  for (const auto& s : report.steps) m.newton_iterations += s.iterations;
  m.final_residual = report.iterations.empty() ? 0.0 : report.iterations.back().residual_norm;
  return m;
}

RunOutcome run(const BenchmarkConfig& cfg) {
  RunOutcome out;
  out.problem = make_problem(cfg);
  const Problem& p = *out.problem;
  Assembler assembler(p.mesh, p.layout, cfg.material, cfg.quadrature_degree);
  auto result = solve(assembler, p.bcs, cfg.solver, identity_state(p.mesh, p.layout));
  out.state = std::move(result.state);
  out.report = std::move(result.report);
  out.metrics = measure(p, out.state, out.report, cfg);
  return out;
}

void write_metrics_header(std::ostream& os) {
  os << "case,refine,dofs,triangles,probe_x,probe_y,probe_ux,probe_uy,theta_integral,piola_integral,"
        "min_J,max_J,max_theta_minus_dphi,max_dtheta,newton_iterations,final_residual\n";
}

void write_metrics_row(std::ostream& os, const RunMetrics& m) {
  os << to_string(m.kind) << ',' << m.refine << ',' << m.dofs << ',' << m.triangles << ',' << num(m.probe.x())
     << ',' << num(m.probe.y()) << ',' << num(m.probe_displacement.x()) << ',' << num(m.probe_displacement.y())
     << ',' << num(m.theta_integral) << ',' << num(m.piola_integral) << ',' << num(m.min_jacobian) << ','
     << num(m.max_jacobian) << ',' << num(m.max_theta_minus_dphi) << ',' << num(m.max_dtheta) << ','
     << m.newton_iterations << ',' << num(m.final_residual) << '\n';
}

RunOutcome run_benchmark(const BenchmarkConfig& cfg) {
  const std::filesystem::path dir(cfg.out);
  std::filesystem::create_directories(dir);
  {
    auto os = open_out(dir / "config.txt");
    write_config(os, cfg);
  }
  auto outcome = run(cfg);
  {
    auto os = open_out(dir / "metrics.csv");
    write_metrics_header(os);
    write_metrics_row(os, outcome.metrics);
  }
  {
    auto os = open_out(dir / "report.csv");
    write_report_csv(os, outcome.report);
  }
  write_vtk((dir / "solution.vtk").string(), outcome.problem->mesh, outcome.problem->layout, outcome.state,
            cfg.quadrature_degree);
  return outcome;
}

Extrapolation extrapolate(const std::vector<double>& q) {
  if (q.empty()) throw ConfigError("empty refinement sequence");
  Extrapolation e;
  e.reference = q.back();
  if (q.size() < 3) return e;
  const double d1 = q[q.size() - 2] - q[q.size() - 3];
  const double d2 = q[q.size() - 1] - q[q.size() - 2];
  if (d1 * d2 <= 0.0 || std::abs(d2) >= std::abs(d1)) return e;
  const double ratio = d1 / d2;
  e.observed_order = std::log2(ratio);
  e.reference = q.back() + d2 / (ratio - 1.0);
  e.richardson = true;
  return e;
}

const ConvergenceQuantity& ConvergenceStudy::quantity(const std::string& name) const {
  for (const auto& q : quantities)
    if (q.name == name) return q;
  throw ConfigError("unknown quantity " + name);
}

ConvergenceStudy tabulate(std::vector<RunMetrics> runs) {
  ConvergenceStudy s;
  s.runs = std::move(runs);
  auto add = [&](const std::string& name, auto get) {
    ConvergenceQuantity q;
    q.name = name;
    for (const auto& r : s.runs) q.values.push_back(get(r));
    q.reference = extrapolate(q.values);
    const double ref = q.reference.reference;
    for (std::size_t i = 0; i < q.values.size(); ++i) {
      const double scale = ref != 0.0 ? std::abs(ref) : 1.0;
      q.relative_error.push_back(std::abs(q.values[i] - ref) / scale);
      q.relative_change.push_back(i == 0 ? std::numeric_limits<double>::quiet_NaN()
                                         : std::abs(q.values[i] - q.values[i - 1]) /
                                               std::max(std::abs(q.values[i]), std::numeric_limits<double>::min()));
    }
    s.quantities.push_back(std::move(q));
  };
  add("probe_ux", [](const RunMetrics& r) { return r.probe_displacement.x(); });
  add("probe_uy", [](const RunMetrics& r) { return r.probe_displacement.y(); });
  add("theta_integral", [](const RunMetrics& r) { return r.theta_integral; });
  add("piola_integral", [](const RunMetrics& r) { return r.piola_integral; });
  return s;
}

void write_convergence_csv(std::ostream& os, const ConvergenceStudy& s) {
  os << "refine,dofs";
  for (const auto& q : s.quantities) os << ',' << q.name << ",rel_err_" << q.name << ",rel_change_" << q.name;
  os << '\n';
  for (std::size_t i = 0; i < s.runs.size(); ++i) {
    os << s.runs[i].refine << ',' << s.runs[i].dofs;
    for (const auto& q : s.quantities)
      os << ',' << num(q.values[i]) << ',' << num(q.relative_error[i]) << ','
         << (i == 0 ? std::string("nan") : num(q.relative_change[i]));
    os << '\n';
  }
  os << "reference,";
  for (const auto& q : s.quantities)
    os << ',' << num(q.reference.reference) << ',' << (q.reference.richardson ? "richardson" : "finest") << ','
       << num(q.reference.observed_order);
  os << '\n';
}

ConvergenceStudy convergence_study(const BenchmarkConfig& cfg, const std::vector<int>& levels, bool write_outputs) {
  if (levels.size() < 2) throw ConfigError("convergence study needs at least two levels");
  std::vector<RunMetrics> runs;
  const std::filesystem::path dir(cfg.out);
  for (int level : levels) {
    BenchmarkConfig c = cfg;
    c.refine = level;
    c.out = (dir / ("level_" + std::to_string(level))).string();
    runs.push_back(write_outputs ? run_benchmark(c).metrics : run(c).metrics);
  }
  auto study = tabulate(std::move(runs));
  if (write_outputs) {
    std::filesystem::create_directories(dir);
    {
      auto os = open_out(dir / "config.txt");
      write_config(os, cfg);
    }
    {
      auto os = open_out(dir / "metrics.csv");
      write_metrics_header(os);
      for (const auto& r : study.runs) write_metrics_row(os, r);
    }
    auto os = open_out(dir / "convergence.csv");
    write_convergence_csv(os, study);
  }
  return study;
}

}  // namespace hwforms
