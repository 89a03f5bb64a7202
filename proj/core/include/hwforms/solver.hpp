#pragma once

#include <iosfwd>
#include <memory>
#include <vector>

#include "hwforms/assembly.hpp"

namespace hwforms {

enum class LinearSolverKind { SparseLU };

struct SolverConfig {
  int load_steps = 8;
  /// Effective tolerance is newton_tol * (1 + |f_ext|) with f_ext the full Neumann load vector.
  double newton_tol = 1e-9;
  int max_newton_iters = 60;
  int max_halvings = 20;
  LinearSolverKind linear_solver = LinearSolverKind::SparseLU;
  int threads = 1;

  /// Throws ConfigError on non-positive tolerances or counts.
  void validate() const;
};

struct IterationRecord {
  int step = 0;
  int iter = 0;
  double residual_norm = 0.0;
  /// Line-search factor used to reach this iterate (0 for the first iterate of a step).
  double step_length = 0.0;
  double energy = 0.0;
};

struct StepRecord {
  int step = 0;
  double load_factor = 0.0;
  int iterations = 0;
  double residual_norm = 0.0;
  double energy = 0.0;
  double max_compatibility = 0.0;
};

struct SolveReport {
  double tolerance = 0.0;
  std::vector<IterationRecord> iterations;
  std::vector<StepRecord> steps;

  /// Residual history of one load step (1-based).
  std::vector<double> residual_history(int step) const;
};

/// CSV columns: step, iter, residual_norm, step_length, energy.
void write_report_csv(std::ostream& os, const SolveReport& report);

/// Direct factorization of a square, possibly indefinite sparse matrix.
/// The sparsity pattern is analysed on the first call and reused while it stays the same size.
class LinearSolver {
public:
  explicit LinearSolver(LinearSolverKind kind = LinearSolverKind::SparseLU);
  ~LinearSolver();
  LinearSolver(LinearSolver&&) noexcept;
  LinearSolver& operator=(LinearSolver&&) noexcept;

  /// Throws LinearSolveFailure if the matrix is singular.
  void factorize(const SparseMatrix& K);
  /// Solve with the last factorization, plus up to two steps of iterative refinement.
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-off factorize-and-solve.
Eigen::VectorXd linear_solve(const SparseMatrix& K, const Eigen::VectorXd& rhs);

struct SolveResult {
  MixedState state;
  SolveReport report;
};

/// Incremental-load Newton iteration. Dirichlet and Neumann data are scaled by
/// k/load_steps at step k; each step starts from the previous solution.
/// A nonzero Dirichlet increment is first propagated through the tangent at
/// the previous solution (halved until admissible), then imposed exactly.
/// The line search halves the update d until every quadrature point has J > 0
/// and either the residual norm decreases or the simplified Newton correction
/// |K⁻¹ r(x + αd)| (current factorization) is smaller than |d|. The smallest
/// step is accepted if it is admissible.
/// Throws LinearSolveFailure, NoConvergence or LineSearchExhausted.
SolveResult solve(const Assembler& assembler, const BoundaryConditions& bcs, const SolverConfig& config,
                  MixedState initial);

}  // namespace hwforms
