#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hwforms/cases.hpp"
#include "hwforms/solver.hpp"

namespace hwforms {

/// One row of metrics.csv.
struct RunMetrics {
  CaseKind kind = CaseKind::Cook;
  int refine = 0;
  int dofs = 0;
  int triangles = 0;
  Vec2 probe = Vec2::Zero();
  Vec2 probe_displacement = Vec2::Zero();
  double theta_integral = 0.0;
  double piola_integral = 0.0;
  double min_jacobian = 0.0;
  double max_jacobian = 0.0;
  double max_theta_minus_dphi = 0.0;
  double max_dtheta = 0.0;
  int newton_iterations = 0;
  double final_residual = 0.0;
};

struct RunOutcome {
  RunMetrics metrics;
  SolveReport report;
  std::unique_ptr<Problem> problem;
  MixedState state;
};

/// Builds, solves and measures one configuration without touching the disk.
RunOutcome run(const BenchmarkConfig& cfg);

RunMetrics measure(const Problem& problem, const MixedState& state, const SolveReport& report,
                   const BenchmarkConfig& cfg);

void write_metrics_header(std::ostream& os);
void write_metrics_row(std::ostream& os, const RunMetrics& m);

/// run() plus config.txt, metrics.csv, report.csv and solution.vtk in cfg.out.
RunOutcome run_benchmark(const BenchmarkConfig& cfg);

/// Reference value of a refinement sequence: Richardson extrapolation from the
/// last three levels (ratio-2 refinement, observed order) when they converge
/// monotonically, otherwise the finest value.
struct Extrapolation {
  double reference = 0.0;
  double observed_order = 0.0;
  bool richardson = false;
};

Extrapolation extrapolate(const std::vector<double>& sequence);

struct ConvergenceQuantity {
  std::string name;
  std::vector<double> values;
  Extrapolation reference;
  std::vector<double> relative_error;
  /// |q_l - q_{l-1}| / |q_l|; NaN on the first level.
  std::vector<double> relative_change;
};

struct ConvergenceStudy {
  std::vector<RunMetrics> runs;
  std::vector<ConvergenceQuantity> quantities;

  const ConvergenceQuantity& quantity(const std::string& name) const;
};

/// Tabulates probe displacement, ∫|θ|² and ∫‖P‖ over `levels`.
ConvergenceStudy tabulate(std::vector<RunMetrics> runs);

void write_convergence_csv(std::ostream& os, const ConvergenceStudy& study);

/// Runs cfg at every level (output of level k goes to cfg.out/level_k) and
/// writes metrics.csv (one row per level) and convergence.csv in cfg.out.
ConvergenceStudy convergence_study(const BenchmarkConfig& cfg, const std::vector<int>& levels,
                                   bool write_outputs = true);

}  // namespace hwforms
