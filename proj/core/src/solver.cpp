#include "hwforms/solver.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <Eigen/OrderingMethods>
#include <Eigen/SparseLU>

#include "hwforms/errors.hpp"

namespace hwforms {

void SolverConfig::validate() const {
  if (load_steps < 1) throw ConfigError("solver: load_steps must be >= 1");
  if (!(newton_tol > 0.0)) throw ConfigError("solver: newton_tol must be > 0");
  if (max_newton_iters < 1) throw ConfigError("solver: max_newton_iters must be >= 1");
  if (max_halvings < 0) throw ConfigError("solver: max_halvings must be >= 0");
  if (threads < 1) throw ConfigError("solver: threads must be >= 1");
}

std::vector<double> SolveReport::residual_history(int step) const {
  std::vector<double> out;
  for (const auto& it : iterations)
    if (it.step == step) out.push_back(it.residual_norm);
  return out;
}

void write_report_csv(std::ostream& os, const SolveReport& report) {
  os << "step,iter,residual_norm,step_length,energy\n";
  char buf[128];
  for (const auto& it : report.iterations) {
    std::snprintf(buf, sizeof buf, "%d,%d,%.15e,%.15e,%.15e\n", it.step, it.iter, it.residual_norm, it.step_length,
                  it.energy);
    os << buf;
  }
}

struct LinearSolver::Impl {
  Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
  SparseMatrix K;
  Eigen::Index analysed_size = -1;
  Eigen::Index analysed_nnz = -1;
};

LinearSolver::LinearSolver(LinearSolverKind) : impl_(std::make_unique<Impl>()) {}
LinearSolver::~LinearSolver() = default;
LinearSolver::LinearSolver(LinearSolver&&) noexcept = default;
LinearSolver& LinearSolver::operator=(LinearSolver&&) noexcept = default;

void LinearSolver::factorize(const SparseMatrix& K) {
  if (K.rows() != K.cols()) throw LinearSolveFailure("matrix is not square");
  impl_->K = K;
  impl_->K.makeCompressed();
  if (impl_->analysed_size != K.rows() || impl_->analysed_nnz != impl_->K.nonZeros()) {
    impl_->lu.analyzePattern(impl_->K);
    impl_->analysed_size = K.rows();
    impl_->analysed_nnz = impl_->K.nonZeros();
  }
  impl_->lu.factorize(impl_->K);
  if (impl_->lu.info() != Eigen::Success)
    throw LinearSolveFailure("sparse LU factorization failed: " + impl_->lu.lastErrorMessage());
}

Eigen::VectorXd LinearSolver::solve(const Eigen::VectorXd& rhs) const {
  Eigen::VectorXd x = impl_->lu.solve(rhs);
  if (impl_->lu.info() != Eigen::Success || !x.allFinite()) throw LinearSolveFailure("sparse LU solve failed");
  const double bnorm = rhs.norm();
  for (int k = 0; k < 2; ++k) {
    const Eigen::VectorXd r = rhs - impl_->K * x;
    if (r.norm() <= 1e-12 * bnorm) break;
    x += impl_->lu.solve(r);
  }
  if (!x.allFinite()) throw LinearSolveFailure("sparse LU produced non-finite values");
  return x;
}

Eigen::VectorXd linear_solve(const SparseMatrix& K, const Eigen::VectorXd& rhs) {
  LinearSolver s;
  s.factorize(K);
  return s.solve(rhs);
}

SolveResult solve(const Assembler& assembler, const BoundaryConditions& bcs, const SolverConfig& config,
                  MixedState initial) {
  config.validate();
  const auto& mesh = assembler.mesh();
  const auto& layout = assembler.layout();
  validate(bcs, mesh, layout);
  if (static_cast<int>(initial.size()) != layout.total) throw Error("initial state has the wrong size");

  const DirichletReduction reduction(layout.total, bcs);
  const double tol = config.newton_tol * (1.0 + assembler.external_load(bcs, 1.0).norm());
  LinearSolver linear(config.linear_solver);

  SolveResult result{std::move(initial), {}};
  result.report.tolerance = tol;
  MixedState& state = result.state;

  for (int step = 1; step <= config.load_steps; ++step) {
    const double s = double(step) / config.load_steps;
    const AssemblyOptions opts{s, true, config.threads};

    // Tangent predictor for the Dirichlet increment: d_f = -K_ff⁻¹ (r_f + K_fc Δu_c).
    MixedState target = state;
    apply_dirichlet(mesh, layout, bcs, s, target);
    const Eigen::VectorXd du = target.values() - state.values();
    if (du.lpNorm<Eigen::Infinity>() > 0.0) {
      AssembledSystem base;
      try {
        base = assembler.assemble(state, bcs, opts);
      } catch (const NonPositiveJacobian& e) {
        throw LineSearchExhausted(std::string("load step starts from an inadmissible state: ") + e.what());
      }
      linear.factorize(reduction.restrict(base.tangent));
      const Eigen::VectorXd rhs = -reduction.restrict(base.residual + base.tangent * du);
      const Eigen::VectorXd predictor = reduction.prolong(linear.solve(rhs)) + du;
      double alpha = 1.0;
      for (int h = 0; h <= config.max_halvings; ++h, alpha *= 0.5) {
        MixedState trial = state;
        trial.values() += alpha * predictor;
        if (assembler.min_jacobian(trial) > 0.0) {
          state = std::move(trial);
          break;
        }
      }
    }
    apply_dirichlet(mesh, layout, bcs, s, state);

    AssembledSystem sys;
    try {
      sys = assembler.assemble(state, bcs, opts);
    } catch (const NonPositiveJacobian& e) {
      throw LineSearchExhausted(std::string("load step starts from an inadmissible state: ") + e.what());
    }
    double rnorm = reduction.restrict(sys.residual).norm();
    double last_alpha = 0.0;
    int iter = 0;
    for (;; ++iter) {
      result.report.iterations.push_back({step, iter, rnorm, last_alpha, sys.value});
      if (rnorm < tol) break;
      if (iter == config.max_newton_iters)
        throw NoConvergence("load step " + std::to_string(step) + ": residual " + std::to_string(rnorm) +
                            " above tolerance " + std::to_string(tol) + " after " + std::to_string(iter) +
                            " Newton iterations");

      linear.factorize(reduction.restrict(sys.tangent));
      const Eigen::VectorXd reduced_update = linear.solve(-reduction.restrict(sys.residual));
      const double update_norm = reduced_update.norm();
      const Eigen::VectorXd update = reduction.prolong(reduced_update);

      double alpha = 1.0;
      bool accepted = false;
      MixedState trial = state;
      AssembledSystem trial_sys;
      double trial_norm = 0.0;
      for (int h = 0; h <= config.max_halvings; ++h, alpha *= 0.5) {
        trial.values() = state.values() + alpha * update;
        try {
          trial_sys = assembler.assemble(trial, bcs, opts);
        } catch (const NonPositiveJacobian&) {
          continue;
        }
        const Eigen::VectorXd trial_residual = reduction.restrict(trial_sys.residual);
        trial_norm = trial_residual.norm();
        const bool decreased = trial_norm < rnorm;
        if (decreased || h == config.max_halvings || linear.solve(trial_residual).norm() < update_norm) {
          accepted = true;
          break;
        }
      }
      if (!accepted)
        throw LineSearchExhausted("load step " + std::to_string(step) + ": no admissible step (J > 0) after " +
                                  std::to_string(config.max_halvings) + " halvings");
      state = std::move(trial);
      sys = std::move(trial_sys);
      rnorm = trial_norm;
      last_alpha = alpha;
    }

    const auto compat = compatibility_residual(mesh, layout, state, assembler.quadrature_rule().degree);
    double cmax = 0.0;
    for (const auto& c : compat) cmax = std::max({cmax, c.theta_minus_dphi, c.dtheta});
    result.report.steps.push_back({step, s, iter, rnorm, sys.value, cmax});
  }
  return result;
}

}  // namespace hwforms
